// End-to-end acceptance run: one PASS/FAIL line per criterion, with timings.
// Usage: acceptance [criterion numbers...]   (default: all ten)
// Exit code 0 only if every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fsind/catalog.hpp"
#include "fsind/character.hpp"
#include "fsind/cosets.hpp"
#include "fsind/indicators.hpp"
#include "fsind/named_groups.hpp"

using namespace fsind;

namespace {

// Shared by every scan so criterion 9 can re-check all tables built along the way.
auto g_cache = std::make_shared<TableCache>();

ScanOptions scan_opts() {
  ScanOptions o;
  o.cache = g_cache;
  return o;
}

CatalogOptions catalog_opts() {
  CatalogOptions o;
  o.scan = scan_opts();
  return o;
}

Permutation cyc(const std::vector<std::vector<int>>& cycles, std::size_t n) {
  return Permutation::from_cycles(cycles, n);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Collects sub-check outcomes for one criterion.
struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string summary(const IndicatorReport& r) {
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (const auto& [v, k] : r.summary) {
    s << (first ? "" : ", ") << v << ':' << k;
    first = false;
  }
  s << '}';
  return s.str();
}

void census_criterion(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  struct Case {
    std::size_t l, n;
    Census expected;
  };
  std::vector<Case> cases{{3, 6, {34, 20}}, {4, 8, {197, 154}}};
  for (std::size_t n = 4; n <= 8; ++n) cases.push_back({n - 2, n, {7, 2}});
  for (const auto& c : cases) {
    const auto got = census_Sl(c.l, c.n);
    std::ostringstream s;
    s << "census(" << c.l << "," << c.n << ") = (" << got.total << "," << got.null << "), expected ("
      << c.expected.total << "," << c.expected.null << ")";
    out.check(got == c.expected, s.str());
    if (got == c.expected) out.note(s.str());
  }
  const double t = seconds_since(start);
  out.check(t < 60, "runtime " + std::to_string(t) + " s, target < 60 s");
}

void explicit_minus_one(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = verify("ex-minus-one", {}, catalog_opts());
  const double t = seconds_since(start);
  out.check(r.status == ClaimStatus::pass, "ex-minus-one: " + r.detail);
  for (const auto& c : r.counterexamples) out.note(c);
  out.check(r.evidence["stab_order"] == 2, "|S(g)| = 2");
  out.check(r.evidence["values"] == nlohmann::json({1, -1}), "values [1, -1]");
  for (const auto& c : r.evidence["conjugates"]) out.check(!c["in_H"].get<bool>(), c["label"].get<std::string>());
  out.note("values " + r.evidence["values"].dump());
  out.check(t < 1, "runtime " + std::to_string(t) + " s, target < 1 s");
}

void vanishing(Outcome& out) {
  const auto h = sym_embed(5, 7);
  const auto g = cyc({{5, 6}}, 7);
  const auto stab = stabilizer(g, h);
  const auto table = g_cache->get(stab.group);
  const auto values = nu_m_general_all(g, *table, h, 7);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.check(values[i] == 0, "nu_7 of chi " + std::to_string(i) + " is " + std::to_string(values[i]));
  }
  out.check(!vanishing_witness(g, h, 7), "vanishing_witness is false");
  out.note(std::to_string(values.size()) + " characters of S(g), |S(g)| = " + std::to_string(stab.group.order()));
}

void claim_must_pass(Outcome& out, const std::string& id, const ClaimParams& params) {
  const auto r = verify(id, params, catalog_opts());
  std::string key = id;
  for (const auto& [k, v] : params) key += " " + k + "=" + std::to_string(v);
  out.check(r.status == ClaimStatus::pass, key + ": " + to_string(r.status) + " " + r.detail);
  for (std::size_t i = 0; i < r.counterexamples.size() && i < 3; ++i) out.note("  " + r.counterexamples[i]);
}

void sl_dichotomy(Outcome& out) {
  std::size_t count = 0;
  for (long long n = 3; n <= 8; ++n) {
    for (long long l = 2; l < n; ++l) {
      claim_must_pass(out, "thm-Sl", {{"n", n}, {"l", l}});
      ++count;
    }
  }
  out.note(std::to_string(count) + " pairs (l, n)");
}

void alternating(Outcome& out) {
  for (long long n = 2; n <= 7; ++n) claim_must_pass(out, "thm-An", {{"n", n}});
  for (long long n = 3; n <= 7; ++n) {
    for (long long l = 2; l < n; ++l) claim_must_pass(out, "thm-Al", {{"n", n}, {"l", l}});
  }
}

void cyclic_criterion(Outcome& out) {
  for (long long n : {3, 5, 6, 7}) claim_must_pass(out, "thm-Cn", {{"n", n}});
  const auto start = std::chrono::steady_clock::now();
  const auto r = category_scan(sym(8), cyclic(8), 2, scan_opts());
  const double t = seconds_since(start);
  out.check(r.min_value() == 0, "C(S8, C8) minimum is " + std::to_string(r.min_value()));
  out.note("C(S8, C8) " + summary(r) + " in " + std::to_string(t) + " s");
  out.check(t < 300, "C(S8, C8) runtime target < 300 s");
}

void tilde(Outcome& out) {
  auto has_minus_one = [&](const std::string& label, const PermGroup& g, const PermGroup& h) {
    const auto r = category_scan(g, h, 2, scan_opts());
    out.check(r.contains(-1), label + " contains -1: " + summary(r));
    if (r.contains(-1)) out.note(label + " " + summary(r));
  };
  auto zero_one = [&](const std::string& label, const PermGroup& g, const PermGroup& h) {
    const auto r = category_scan(g, h, 2, scan_opts());
    const bool ok = r.min_value() >= 0 && r.max_value() <= 1;
    out.check(ok, label + " within {0,1}: " + summary(r));
    if (ok) out.note(label + " " + summary(r));
    for (const auto& e : r.entries) {
      if (e.nu < 0) {
        out.note("  -1 at g=" + e.rep.to_string() + (e.rep.sign() == 1 ? " (even)" : " (odd)") + " chi degree " +
                 std::to_string(e.chi_degree) + ", |S|=" + std::to_string(e.stab_order));
      }
    }
  };
  has_minus_one("C(A7, S~5)", alt(7), tilde_sym(7));
  has_minus_one("C(A8, S~6)", alt(8), tilde_sym(8));
  zero_one("C(S9, S~7)", sym(9), tilde_sym(9));
  zero_one("C(S10, S~8)", sym(10), tilde_sym(10));
  has_minus_one("C(A8, S~5)", alt(8), tilde_sym(7, 8));
}

void formula_chain(Outcome& out) {
  struct Case {
    std::string label;
    PermGroup g, h;
  };
  const std::vector<Case> cases{{"C(S6, S3)", sym(6), sym_embed(3, 6)}, {"C(S7, S~5)", sym(7), tilde_sym(7)}};
  for (const auto& c : cases) {
    std::size_t simples = 0, cosets = 0;
    for (const auto& dc : double_cosets(c.g, c.h).cosets) {
      const auto rep = normalize_rep_order2(dc.rep, c.h);
      if (!rep || c.h.contains(*rep)) continue;
      ++cosets;
      for (const auto& p : nu2_all_paths(*rep, c.h, *g_cache)) {
        ++simples;
        out.check(p.agree(), c.label + " g=" + rep->to_string() + " chi=" + std::to_string(p.chi) + ": " +
                                 std::to_string(p.general) + "," + std::to_string(p.stab) + "," +
                                 std::to_string(p.hat) + "," + std::to_string(p.induced) + "," +
                                 std::to_string(p.extension));
      }
    }
    out.note(c.label + ": " + std::to_string(simples) + " simples over " + std::to_string(cosets) +
             " double cosets, all five formulas agree");
  }
}

void tables(Outcome& out) {
  struct Oracle {
    std::string label;
    PermGroup group;
    std::vector<Permutation> reps;
    std::vector<std::vector<Cyclotomic>> rows;
  };
  std::vector<Oracle> oracles{
      {"S3", sym(3), {Permutation(3), cyc({{1, 2}}, 3), cyc({{1, 2, 3}}, 3)}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}},
      {"S4",
       sym(4),
       {Permutation(4), cyc({{1, 2}}, 4), cyc({{1, 2}, {3, 4}}, 4), cyc({{1, 2, 3}}, 4), cyc({{1, 2, 3, 4}}, 4)},
       {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}}},
      {"A4",
       alt(4),
       {Permutation(4), cyc({{1, 2}, {3, 4}}, 4), cyc({{1, 2, 3}}, 4), cyc({{1, 3, 2}}, 4)},
       {{1, 1, 1, 1},
        {1, 1, root_of_unity(3, 1), root_of_unity(3, 2)},
        {1, 1, root_of_unity(3, 2), root_of_unity(3, 1)},
        {3, -1, 0, 0}}},
  };
  {
    Oracle c12{"C12", cyclic(12), {}, {}};
    const auto t = cyc({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}}, 12);
    for (int k = 0; k < 12; ++k) c12.reps.push_back(t.pow(k));
    for (int j = 0; j < 12; ++j) {
      std::vector<Cyclotomic> row;
      for (int k = 0; k < 12; ++k) row.push_back(root_of_unity(12, j * k));
      c12.rows.push_back(row);
    }
    oracles.push_back(std::move(c12));
    const auto a = cyc({{1, 2}, {3, 4}}, 4), b = cyc({{1, 3}, {2, 4}}, 4);
    oracles.push_back({"Klein four",
                       PermGroup(4, {a, b}),
                       {Permutation(4), a, b, a * b},
                       {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}});
  }
  for (auto& o : oracles) {
    const auto table = character_table(o.group);
    const auto& cd = *table.classes();
    bool ok = cd.num_classes() == o.reps.size();
    std::vector<std::vector<Cyclotomic>> computed;
    if (ok) {
      for (const auto& row : table.rows()) {
        std::vector<Cyclotomic> v;
        for (const auto& rep : o.reps) v.push_back(row[cd.class_of(rep)]);
        computed.push_back(std::move(v));
      }
      std::sort(computed.begin(), computed.end());
      std::sort(o.rows.begin(), o.rows.end());
      ok = computed == o.rows;
    }
    out.check(ok, o.label + " table matches the textbook table");
  }
  const auto all = g_cache->tables();
  std::size_t checked = 0;
  std::uint64_t largest = 0;
  for (const auto& t : all) {
    const auto problem = check_table(*t);
    out.check(problem.empty(), "table of a group of order " + std::to_string(t->group().order()) + ": " + problem);
    ++checked;
    largest = std::max(largest, t->group().order());
  }
  out.note("5 oracle tables; orthogonality and sum of squared degrees on " + std::to_string(checked) +
           " cached tables (largest group order " + std::to_string(largest) + ")");
}

void invariance_and_reduction(Outcome& out) {
  struct InvCase {
    Permutation u, g;
    PermGroup h;
    long long m;
  };
  const std::vector<InvCase> inv{
      {cyc({{7, 8}}, 8), cyc({{1, 6}}, 8), sym_embed(3, 8), 2},
      {cyc({{7, 8}}, 8), cyc({{1, 4}, {2, 5}}, 8), sym_embed(3, 8), 2},
      {cyc({{6, 7, 8}}, 8), cyc({{1, 4, 5}}, 8), sym_embed(3, 8), 3},
      {cyc({{8, 9}}, 9), cyc({{1, 3}, {2, 4}}, 9), tilde_sym(7, 9), 2},
      {cyc({{8, 9}}, 9), cyc({{1, 3}, {2, 4}, {5, 6}}, 9), tilde_sym(7, 9), 2},
  };
  for (const auto& c : inv) {
    const auto r = invariance_shift(c.u, c.g, c.h, c.m, *g_cache);
    std::string label = "invariance u=" + c.u.to_string() + " g=" + c.g.to_string() + " m=" + std::to_string(c.m);
    for (const auto& v : r.violations) label += " [" + v + "]";
    out.check(r.ok(), label);
  }
  out.note(std::to_string(inv.size()) + " invariance instances");
  const auto r = reduction_tf(cyc({{9, 11}, {10, 12}}, 12), cyc({{1, 3}, {2, 4}}, 12), tilde_sym(10, 12),
                              sym_embed(10, 12), *g_cache);
  for (const auto& v : r.violations) out.note("reduction hypothesis: " + v);
  out.check(r.violations.empty(), "reduction hypotheses hold");
  out.check(r.stabilizer_equal, "Stab_H(tfH) = Stab_H'(fH')");
  out.check(r.values_equal, "indicators agree on both sides");
  std::ostringstream s;
  s << "reduction: |H'| = " << r.h_prime_order << ", |S| = " << r.stab_order << ", values";
  for (auto v : r.lhs) s << ' ' << v;
  out.note(s.str());
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "census reproduction", census_criterion},
      {2, "explicit -1 in C(S12, C12)", explicit_minus_one},
      {3, "vanishing nu_7 in C(S7, S5)", vanishing},
      {4, "S_l in S_n dichotomy, n <= 8", sl_dichotomy},
      {5, "A_n and A_l subgroups, n <= 7", alternating},
      {6, "cyclic subgroups, C(S8, C8) nonnegative", cyclic_criterion},
      {7, "tilde families", tilde},
      {8, "formula chain equivalence", formula_chain},
      {9, "character table correctness", tables},
      {10, "invariance and reduction", invariance_and_reduction},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all_ok = true;
  int passed = 0, run = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    ++run;
    passed += out.ok ? 1 : 0;
    all_ok = all_ok && out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << t << " s)\n";
    for (const auto& n : out.notes) std::cout << "      " << n << '\n';
    std::cout.flush();
  }
  std::cout << passed << "/" << run << " criteria passed\n";
  return all_ok ? 0 : 1;
}
