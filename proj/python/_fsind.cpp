// Python bindings. Reports cross the boundary as JSON text and are decoded
// in fsind/__init__.py, so the Python dicts match the CLI's --json output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsind/catalog.hpp"
#include "fsind/cosets.hpp"
#include "fsind/group_spec.hpp"
#include "fsind/indicators.hpp"
#include "fsind/named_groups.hpp"
#include "fsind/report_io.hpp"

namespace py = pybind11;
using namespace fsind;

namespace {

Limits make_limits(std::uint64_t enumeration_bound, std::uint64_t index_bound) {
  Limits l;
  l.enumeration_bound = enumeration_bound;
  l.index_bound = index_bound;
  return l;
}

std::string indicators_json(const std::string& g_text, const std::string& h_text, long long m, unsigned threads,
                            std::uint64_t enumeration_bound, std::uint64_t index_bound) {
  const auto g = group_from_spec(g_text);
  const auto h = group_from_spec(h_text);
  for (const auto& x : h.generators()) {
    if (h.degree() != g.degree() || !g.contains(x)) throw std::invalid_argument("H is not a subgroup of G");
  }
  ScanOptions opts;
  opts.limits = make_limits(enumeration_bound, index_bound);
  opts.threads = threads;
  py::gil_scoped_release release;
  const auto report = category_scan(g, h, m, opts);
  return report_to_json(report, parse_group_spec(g_text).to_string(), parse_group_spec(h_text).to_string()).dump();
}

}  // namespace

PYBIND11_MODULE(_fsind, m) {
  m.doc() = "Frobenius-Schur indicators of group-theoretical fusion categories C(G, H)";

  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("group_order", [](const std::string& spec) { return group_from_spec(spec).order(); }, py::arg("spec"));
  m.def("canonical_spec", [](const std::string& spec) { return parse_group_spec(spec).to_string(); },
        py::arg("spec"));
  m.def("indicators_json", &indicators_json, py::arg("G"), py::arg("H"), py::arg("m") = 2, py::arg("threads") = 0,
        py::arg("enumeration_bound") = Limits{}.enumeration_bound, py::arg("index_bound") = Limits{}.index_bound);
  m.def("indicators_csv", [](const std::string& g_text, const std::string& h_text, long long mm) {
    const auto g = group_from_spec(g_text);
    const auto h = group_from_spec(h_text);
    py::gil_scoped_release release;
    return report_to_csv(category_scan(g, h, mm));
  }, py::arg("G"), py::arg("H"), py::arg("m") = 2);
  m.def("double_cosets_json", [](const std::string& g_text, const std::string& h_text) {
    const auto g = group_from_spec(g_text);
    const auto h = group_from_spec(h_text);
    return double_cosets_to_json(double_cosets(g, h), h).dump();
  }, py::arg("G"), py::arg("H"));
  m.def("census", [](std::size_t l, std::size_t n, const std::string& method) {
    if (method != "orbit" && method != "normal-form") throw std::invalid_argument("method is orbit or normal-form");
    const auto c = method == "orbit" ? census_Sl(l, n) : census_normal_form(l, n);
    return std::make_pair(c.total, c.null);
  }, py::arg("l"), py::arg("n"), py::arg("method") = "orbit");
  m.def("verify_json", [](const std::string& id, const ClaimParams& params) {
    VerificationReport r;
    {
      py::gil_scoped_release release;
      r = verify(id, params);
    }
    return verification_to_json(r).dump();
  }, py::arg("claim"), py::arg("params") = ClaimParams{});
  m.def("verify_all_json", [](const std::string& profile) {
    std::vector<VerificationReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_all(profile);
    }
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) out.push_back(verification_to_json(r));
    return out.dump();
  }, py::arg("profile") = "quick");
  m.def("claims", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : claim_registry()) out.emplace_back(c.id, c.statement);
    return out;
  });
}
