// fsind: command-line driver for indicator scans, censuses and claim checks.
//
// Exit codes: 0 success / all claims pass (or skipped), 1 a claim failed,
// 2 usage error (bad flags, bad group spec, H not in G, bound exceeded).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fsind/catalog.hpp"
#include "fsind/config.hpp"
#include "fsind/cosets.hpp"
#include "fsind/group_spec.hpp"
#include "fsind/indicators.hpp"
#include "fsind/report_io.hpp"

namespace {

using fsind::Config;
using Json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string config_path;
  std::string out_path;
  bool timing = false;
  std::optional<std::uint64_t> enumeration_bound, index_bound, seed;
  std::optional<unsigned> threads;
};

Config effective_config(const Globals& g) {
  Config c = fsind::resolve_config(g.config_path.empty() ? std::nullopt : std::optional(g.config_path));
  if (g.enumeration_bound) c.limits.enumeration_bound = *g.enumeration_bound;
  if (g.index_bound) c.limits.index_bound = *g.index_bound;
  if (g.seed) c.seed = *g.seed;
  if (g.threads) c.threads = *g.threads;
  return c;
}

fsind::ScanOptions scan_options(const Config& c) {
  fsind::ScanOptions s;
  s.limits = c.limits;
  s.seed = c.seed;
  s.threads = c.threads;
  return s;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + g.out_path);
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

fsind::PermGroup parse_group(const std::string& label, const std::string& text) {
  try {
    return fsind::group_from_spec(text);
  } catch (const fsind::ParseError& e) {
    throw UsageError("--" + label + ": " + e.what());
  }
}

void require_subgroup(const fsind::PermGroup& g, const fsind::PermGroup& h) {
  if (g.degree() != h.degree()) {
    throw UsageError("H has degree " + std::to_string(h.degree()) + " but G has degree " + std::to_string(g.degree()));
  }
  for (const auto& x : h.generators()) {
    if (!g.contains(x)) throw UsageError("H is not a subgroup of G: generator " + x.to_string() + " is not in G");
  }
}

std::string summary_text(const fsind::IndicatorReport& r) {
  std::ostringstream s;
  s << "summary:";
  for (const auto& [value, count] : r.summary) s << ' ' << value << ':' << count;
  return s.str();
}

int cmd_indicators(const Globals& gl, const std::string& g_text, const std::string& h_text, int m, bool json,
                   bool csv) {
  if (m < 1) throw UsageError("--m must be at least 1");
  const auto g = parse_group("G", g_text);
  const auto h = parse_group("H", h_text);
  require_subgroup(g, h);
  const auto cfg = effective_config(gl);
  const auto start = std::chrono::steady_clock::now();
  const auto report = fsind::category_scan(g, h, m, scan_options(cfg));
  const double elapsed = seconds_since(start);
  const auto g_spec = fsind::parse_group_spec(g_text).to_string();
  const auto h_spec = fsind::parse_group_spec(h_text).to_string();
  if (json) {
    emit(gl, fsind::report_to_json(report, g_spec, h_spec, gl.timing ? std::optional(elapsed) : std::nullopt)
                     .dump(2) +
                 "\n");
  } else if (csv) {
    emit(gl, fsind::report_to_csv(report));
  } else {
    std::ostringstream s;
    s << "C(" << g_spec << ", " << h_spec << ") m=" << m << " |G|=" << report.g_order << " |H|=" << report.h_order
      << " double_cosets=" << report.num_double_cosets << " simples=" << report.entries.size() << '\n';
    for (const auto& e : report.entries) {
      s << e.rep.to_string() << "\tchi=" << e.chi << "\tdeg=" << e.chi_degree << "\t|S|=" << e.stab_order
        << "\tnu=" << e.nu << '\t' << fsind::to_string(e.path) << '\n';
    }
    s << summary_text(report) << '\n';
    emit(gl, s.str());
  }
  if (gl.timing) std::cerr << "runtime_seconds: " << elapsed << '\n';
  return kOk;
}

int cmd_double_cosets(const Globals& gl, const std::string& g_text, const std::string& h_text, bool json) {
  const auto g = parse_group("G", g_text);
  const auto h = parse_group("H", h_text);
  require_subgroup(g, h);
  const auto cfg = effective_config(gl);
  const auto dc = fsind::double_cosets(g, h, cfg.limits);
  if (json) {
    emit(gl, fsind::double_cosets_to_json(dc, h, cfg.limits).dump(2) + "\n");
    return kOk;
  }
  std::ostringstream s;
  s << "rep,size,stab_order\n";
  for (const auto& c : dc.cosets) {
    s << '"' << c.rep.to_string() << "\"," << c.size << ',' << fsind::stabilizer(c.rep, h, cfg.limits).group.order()
      << '\n';
  }
  emit(gl, s.str());
  return kOk;
}

// Rows (l, n') for every n' <= n and 1 <= n' - l <= max_k: data points for how the
// share of null double cosets moves as n - l grows.
int cmd_census_series(const Globals& gl, std::size_t n, std::size_t max_k, const std::string& method) {
  const auto cfg = effective_config(gl);
  std::vector<fsind::CensusRow> rows;
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (std::size_t m = k + 1; m <= n; ++m) {
      const std::size_t l = m - k;
      rows.push_back({l, m,
                      method == "normal-form" ? fsind::census_normal_form(l, m, cfg.limits)
                                              : fsind::census_Sl(l, m, cfg.limits)});
    }
  }
  emit(gl, fsind::census_to_csv(rows));
  return kOk;
}

int cmd_search(const Globals& gl, const std::string& g_text, const std::string& h_text, int m, long long value) {
  const auto g = parse_group("G", g_text);
  const auto h = parse_group("H", h_text);
  require_subgroup(g, h);
  const auto report = fsind::category_scan(g, h, m, scan_options(effective_config(gl)));
  std::ostringstream s;
  std::size_t found = 0;
  for (const auto& e : report.entries) {
    if (e.nu != value) continue;
    ++found;
    s << e.rep.to_string() << (e.rep.sign() == 1 ? " even" : " odd") << " chi=" << e.chi << " deg=" << e.chi_degree
      << " |S|=" << e.stab_order << " nu=" << e.nu << '\n';
  }
  s << found << " of " << report.entries.size() << " simples have nu_" << m << " = " << value << '\n';
  emit(gl, s.str());
  return kOk;
}

int cmd_census(const Globals& gl, std::size_t l, std::size_t n, const std::string& method, bool csv) {
  if (l < 1 || l > n) throw UsageError("need 1 <= l <= n");
  const auto cfg = effective_config(gl);
  const auto c = method == "normal-form" ? fsind::census_normal_form(l, n, cfg.limits)
                                         : fsind::census_Sl(l, n, cfg.limits);
  if (csv) {
    emit(gl, fsind::census_to_csv({{l, n, c}}));
  } else {
    emit(gl, std::to_string(c.total) + "," + std::to_string(c.null) + "\n");
  }
  return kOk;
}

fsind::CatalogOptions catalog_options(const Globals& gl) {
  fsind::CatalogOptions o;
  o.scan = scan_options(effective_config(gl));
  return o;
}

fsind::ClaimParams parse_params(const std::vector<std::string>& items) {
  fsind::ClaimParams out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw UsageError("--param " + name + ": '" + value + "' is not an integer");
    out[name] = v;
  }
  return out;
}

int cmd_verify(const Globals& gl, const std::string& id, const fsind::ClaimParams& params) {
  const auto report = fsind::verify(id, params, catalog_options(gl));
  emit(gl, fsind::verification_to_json(report, gl.timing).dump(2) + "\n");
  return report.status == fsind::ClaimStatus::fail ? kClaimFailed : kOk;
}

int cmd_verify_all(const Globals& gl, const std::string& profile) {
  const auto reports = fsind::run_all(profile, catalog_options(gl));
  Json out = Json::array();
  bool failed = false;
  for (const auto& r : reports) {
    out.push_back(fsind::verification_to_json(r, gl.timing));
    failed = failed || r.status == fsind::ClaimStatus::fail;
    std::cerr << fsind::to_string(r.status) << ' ' << r.claim_id;
    for (const auto& [k, v] : r.params) std::cerr << ' ' << k << '=' << v;
    std::cerr << '\n';
  }
  emit(gl, out.dump(2) + "\n");
  return failed ? kClaimFailed : kOk;
}

int cmd_example(const Globals& gl, const std::string& id, bool json) {
  const auto report = fsind::verify(id, {}, catalog_options(gl));
  if (json) {
    emit(gl, fsind::verification_to_json(report, gl.timing).dump(2) + "\n");
  } else {
    std::ostringstream s;
    const auto& ev = report.evidence;
    s << id << ": " << fsind::to_string(report.status) << '\n';
    s << "g = " << ev.value("g", std::string("?")) << ", |S(g)| = " << ev.value("stab_order", 0) << '\n';
    if (ev.contains("conjugates")) {
      for (const auto& c : ev["conjugates"]) {
        s << c["label"].get<std::string>() << " = " << c["value"].get<std::string>()
          << (c["in_H"].get<bool>() ? "  (in H)" : "  (not in H)") << '\n';
      }
    }
    if (ev.contains("witness")) s << "vanishing witness: " << (ev["witness"].get<bool>() ? "found" : "none") << '\n';
    const auto& values = ev["values"];
    for (std::size_t i = 0; i < values.size(); ++i) {
      s << "chi=" << i << " nu=" << values[i].get<long long>() << '\n';
    }
    for (const auto& c : report.counterexamples) s << "counterexample: " << c << '\n';
    emit(gl, s.str());
  }
  return report.status == fsind::ClaimStatus::fail ? kClaimFailed : kOk;
}

int cmd_claims(const Globals& gl) {
  std::ostringstream s;
  for (const auto& c : fsind::claim_registry()) {
    s << c.id;
    for (const auto& [k, v] : c.defaults) s << ' ' << k << '=' << v;
    s << "\n  " << c.statement << '\n';
  }
  emit(gl, s.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius-Schur indicators of group-theoretical fusion categories C(G, H)"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--config", gl.config_path, "JSON config file (default: $FSIND_CONFIG)");
  app.add_option("--out", gl.out_path, "Write the report here instead of standard output");
  app.add_flag("--timing", gl.timing, "Report runtimes (JSON runtime_seconds, stderr for text)");
  app.add_option("--enumeration-bound", gl.enumeration_bound, "Override the element enumeration bound");
  app.add_option("--index-bound", gl.index_bound, "Override the coset index bound");
  app.add_option("--seed", gl.seed, "Override the random seed");
  app.add_option("--threads", gl.threads, "Override the worker count (0 = hardware)");

  std::string g_text, h_text;
  int m = 2;
  bool json = false, csv = false;
  auto* ind = app.add_subcommand("indicators", "Indicator of every simple object of C(G, H)");
  ind->add_option("--G", g_text, "Ambient group spec")->required();
  ind->add_option("--H", h_text, "Subgroup spec")->required();
  ind->add_option("--m", m, "Indicator degree")->capture_default_str();
  auto* json_flag = ind->add_flag("--json", json, "JSON report");
  ind->add_flag("--csv", csv, "CSV report")->excludes(json_flag);

  auto* dcs = app.add_subcommand("double-cosets", "Double cosets HgH with sizes and stabilizer orders");
  dcs->add_option("--G", g_text)->required();
  dcs->add_option("--H", h_text)->required();
  dcs->add_flag("--json", json);

  std::size_t l = 0, n = 0;
  std::string method = "orbit";
  auto* cen = app.add_subcommand("census", "Count S_l double cosets in S_n and the null ones, as total,null");
  cen->add_option("--l", l)->required();
  cen->add_option("--n", n)->required();
  cen->add_option("--method", method, "orbit or normal-form")
      ->check(CLI::IsMember({"orbit", "normal-form"}))
      ->capture_default_str();
  cen->add_flag("--csv", csv, "CSV with header l,n,total,null");

  std::size_t max_k = 5;
  auto* ser = app.add_subcommand("census-series", "CSV of censuses for all l, n' <= n with 1 <= n' - l <= max-k");
  ser->add_option("--n", n)->required();
  ser->add_option("--max-k", max_k)->capture_default_str();
  ser->add_option("--method", method)->check(CLI::IsMember({"orbit", "normal-form"}))->capture_default_str();

  long long wanted = -1;
  auto* sea = app.add_subcommand("search", "List the simples of C(G, H) with a given indicator value (default -1)");
  sea->add_option("--G", g_text)->required();
  sea->add_option("--H", h_text)->required();
  sea->add_option("--m", m)->capture_default_str();
  sea->add_option("--value", wanted)->capture_default_str();

  std::string claim;
  std::vector<std::string> param_items;
  std::map<std::string, long long> shortcut;
  auto* ver = app.add_subcommand("verify", "Check one claim; JSON report");
  ver->add_option("--claim", claim)->required();
  ver->add_option("--param", param_items, "Claim parameter name=value (repeatable)");
  for (const char* name : {"n", "l", "k", "p"}) {
    ver->add_option_function<long long>(std::string("--") + name,
                                        [&shortcut, name](const long long& v) { shortcut[name] = v; },
                                        std::string("Shorthand for --param ") + name + "=...");
  }

  std::string profile = "quick";
  auto* all = app.add_subcommand("verify-all", "Check every claim instance of a profile; JSON array");
  all->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  std::string example_id;
  auto* ex = app.add_subcommand("example", "Worked examples with their intermediate values");
  ex->add_option("--id", example_id)->required()->check(CLI::IsMember({"ex-minus-one", "ex-nu-p"}));
  ex->add_flag("--json", json);

  auto* claims = app.add_subcommand("claims", "List claim ids, default parameters and statements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ind) return cmd_indicators(gl, g_text, h_text, m, json, csv);
    if (*dcs) return cmd_double_cosets(gl, g_text, h_text, json);
    if (*cen) return cmd_census(gl, l, n, method, csv);
    if (*ser) return cmd_census_series(gl, n, max_k, method);
    if (*sea) return cmd_search(gl, g_text, h_text, m, wanted);
    if (*ver) {
      auto params = parse_params(param_items);
      for (const auto& [k, v] : shortcut) params[k] = v;
      return cmd_verify(gl, claim, params);
    }
    if (*all) return cmd_verify_all(gl, profile);
    if (*ex) return cmd_example(gl, example_id, json);
    if (*claims) return cmd_claims(gl);
  } catch (const fsind::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
