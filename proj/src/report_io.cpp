#include "fsind/report_io.hpp"

#include <sstream>

namespace fsind {

using Json = nlohmann::json;

Json report_to_json(const IndicatorReport& report, const std::string& g_spec, const std::string& h_spec,
                    std::optional<double> runtime_seconds) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"rep", e.rep.to_string()},
                       {"coset_size", e.coset_size},
                       {"stab_order", e.stab_order},
                       {"chi", e.chi},
                       {"chi_degree", e.chi_degree},
                       {"nu", e.nu},
                       {"path", to_string(e.path)}});
  }
  Json summary = Json::object();
  for (const auto& [value, count] : report.summary) summary[std::to_string(value)] = count;
  Json out = {{"category", {{"G_spec", g_spec}, {"H_spec", h_spec}}},
              {"m", report.m},
              {"g_order", report.g_order},
              {"h_order", report.h_order},
              {"double_cosets", report.num_double_cosets},
              {"entries", std::move(entries)},
              {"summary", std::move(summary)}};
  if (runtime_seconds) out["runtime_seconds"] = *runtime_seconds;
  return out;
}

std::string report_to_csv(const IndicatorReport& report) {
  std::ostringstream out;
  out << "rep,coset_size,stab_order,chi,chi_degree,nu,path\n";
  for (const auto& e : report.entries) {
    // Cycle notation contains commas, so the representative is quoted.
    out << '"' << e.rep.to_string() << "\"," << e.coset_size << ',' << e.stab_order << ',' << e.chi << ','
        << e.chi_degree << ',' << e.nu << ',' << to_string(e.path) << '\n';
  }
  return out.str();
}

Json verification_to_json(const VerificationReport& report, bool include_runtime) {
  Json out = {{"claim", report.claim_id},
              {"statement", report.statement},
              {"params", report.params},
              {"status", to_string(report.status)},
              {"detail", report.detail},
              {"evidence", report.evidence},
              {"counterexamples", report.counterexamples}};
  if (include_runtime) out["runtime_seconds"] = report.runtime_seconds;
  return out;
}

Json double_cosets_to_json(const DoubleCosetDecomposition& dc, const PermGroup& h, const Limits& limits) {
  Json out = Json::array();
  for (const auto& c : dc.cosets) {
    out.push_back({{"rep", c.rep.to_string()},
                   {"size", c.size},
                   {"stab_order", stabilizer(c.rep, h, limits).group.order()}});
  }
  return out;
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "l,n,total,null\n";
  for (const auto& r : rows) out << r.l << ',' << r.n << ',' << r.census.total << ',' << r.census.null << '\n';
  return out.str();
}

}  // namespace fsind
