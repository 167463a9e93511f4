#include "fsind/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

#include "fsind/named_groups.hpp"

namespace fsind {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "unknown";
}

namespace {

using Json = nlohmann::json;

const std::set<long long> kTildeExceptions{4, 5, 6, 9, 10, 14, 18};
const std::set<long long> kTildePlusOneExceptions{4, 5, 6, 10};
const std::set<long long> kTildePlusKExceptions{4, 5, 6};

const std::vector<ClaimInfo> kRegistry{
    {"thm-Sl",
     "For S_l inside S_n, on each double coset nu_2(g, chi) takes one value for all chi in Irr(S(g)), that value "
     "is 0 or 1, and it is 0 exactly when the normal form of g is not a product of disjoint transpositions.",
     {"n", "l"},
     {{"n", 6}, {"l", 3}}},
    {"census",
     "Number of S_l double cosets in S_n and of null ones among them: (34, 20) for (l, n) = (3, 6), (197, 154) "
     "for (4, 8), and (7, 2) for (n - 2, n) with 4 <= n <= 8.",
     {"l", "n"},
     {{"l", 3}, {"n", 6}}},
    {"thm-An", "Every simple of C(S_n, A_n) has nu_2 equal to 0 or 1.", {"n"}, {{"n", 6}}},
    {"thm-Al", "Every simple of C(S_n, A_l), l < n, has nu_2 equal to 0 or 1.", {"n", "l"}, {{"n", 6}, {"l", 4}}},
    {"thm-Cn",
     "If 4 does not divide n, every simple of C(S_n, C_n), C_n generated by (1 2 ... n), has nu_2 equal to 0 or 1.",
     {"n"},
     {{"n", 6}}},
    {"ex-nu-p",
     "For S_l inside S_n, a prime p with l + p > n and g = (l, l+1): nu_p(g, chi) = 0 for every chi in Irr(S(g)), "
     "because no x in S_l has (gx)^p in S_l.",
     {"n", "l", "p"},
     {{"n", 7}, {"l", 5}, {"p", 7}}},
    {"ex-minus-one",
     "For H = <t>, t = (1 2 ... 12), and g = (1 2 7 8)(3 11 9 5)(4 12 10 6) in S_12: g^-1 t^k g is outside H for "
     "k = 1, 2, 3 and g t^4 g^-1 is outside H, S(g) = <g^2> = <t^6> has order 2, and nu_2(g, chi) = -1 for its "
     "nontrivial character.",
     {},
     {}},
    {"gap-s8c8", "No simple of C(S_8, C_8) has a negative nu_2.", {}, {}},
    {"thm-tilde",
     "Let S~_{n-2} = A_n meet (S'_2 u (1 2)S'_2). For n in {4, 5, 6, 9, 10, 14, 18} every simple of "
     "C(S_n, S~_{n-2}) has nu_2 in {0, 1}; for other n >= 4, C(A_n, S~_{n-2}) has a simple with nu_2 = -1.",
     {"n"},
     {{"n", 7}}},
    {"thm-tilde-plus1",
     "For n in {4, 5, 6, 10} every simple of C(S_{n+1}, S~_{n-2}) has nu_2 in {0, 1}; for other n >= 4, "
     "C(A_{n+1}, S~_{n-2}) has a simple with nu_2 = -1.",
     {"n"},
     {{"n", 7}}},
    {"thm-tilde-plusk",
     "For k >= 2 and n in {4, 5, 6} every simple of C(S_{n+k}, S~_{n-2}) has nu_2 in {0, 1}; for other n >= 4, "
     "C(A_{n+k}, S~_{n-2}) has a simple with nu_2 = -1.",
     {"n", "k"},
     {{"n", 4}, {"k", 2}}},
    {"lemma-twisted-An",
     "For sigma in S_n outside A_n, the twisted indicator (1/|A_n|) sum_{x in A_n} chi((sigma x)^2) of every "
     "chi in Irr(A_n) is 0 or 1.",
     {"n"},
     {{"n", 6}}},
};

std::size_t as_size(long long v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string("parameter ") + name + " must be positive");
  return static_cast<std::size_t>(v);
}

std::string describe(const IndicatorEntry& e) {
  return "g=" + e.rep.to_string() + " chi=" + std::to_string(e.chi) + " (degree " + std::to_string(e.chi_degree) +
         ", |S|=" + std::to_string(e.stab_order) + ") nu=" + std::to_string(e.nu);
}

Json summary_json(const IndicatorReport& r) {
  Json s = Json::object();
  for (const auto& [v, k] : r.summary) s[std::to_string(v)] = k;
  return s;
}

Json scan_json(const std::string& g, const std::string& h, const IndicatorReport& r) {
  return {{"G", g}, {"H", h}, {"double_cosets", r.num_double_cosets}, {"simples", r.entries.size()},
          {"summary", summary_json(r)}};
}

constexpr std::size_t kMaxCounterexamples = 10;

// Pass iff every value is 0 or 1.
void require_zero_one(VerificationReport& out, const std::string& g, const std::string& h,
                      const IndicatorReport& r) {
  out.evidence["scans"].push_back(scan_json(g, h, r));
  for (const auto& e : r.entries) {
    if ((e.nu != 0 && e.nu != 1) && out.counterexamples.size() < kMaxCounterexamples) {
      out.counterexamples.push_back("C(" + g + ", " + h + "): " + describe(e));
    }
  }
  const bool ok = r.min_value() >= 0 && r.max_value() <= 1;
  if (!ok) out.status = ClaimStatus::fail;
}

// Pass iff some value is -1.
void require_minus_one(VerificationReport& out, const std::string& g, const std::string& h,
                       const IndicatorReport& r) {
  out.evidence["scans"].push_back(scan_json(g, h, r));
  auto it = std::find_if(r.entries.begin(), r.entries.end(), [](const IndicatorEntry& e) { return e.nu == -1; });
  if (it == r.entries.end()) {
    out.status = ClaimStatus::fail;
    out.counterexamples.push_back("C(" + g + ", " + h + "): no simple with nu_2 = -1 among " +
                                  std::to_string(r.entries.size()));
    return;
  }
  out.evidence["witness"] = {{"category", "C(" + g + ", " + h + ")"},
                             {"g", it->rep.to_string()},
                             {"g_is_even", it->rep.sign() == 1},
                             {"chi", it->chi},
                             {"chi_degree", it->chi_degree},
                             {"stab_order", it->stab_order},
                             {"nu", it->nu}};
}

std::string tilde_spec(long long n, long long degree) {
  return "tilde-sym:" + std::to_string(n) + (degree != n ? "," + std::to_string(degree) : "");
}

// Shared shape of the three S~_{n-2} claims.
void check_tilde(VerificationReport& out, long long n, long long degree, bool exceptional, const ScanOptions& scan) {
  if (n < 4) throw std::invalid_argument("n must be at least 4");
  const auto h = tilde_sym(static_cast<std::size_t>(n), static_cast<std::size_t>(degree));
  const std::string d = std::to_string(degree);
  out.evidence["exceptional"] = exceptional;
  if (exceptional) {
    const auto r = category_scan(sym(degree), h, 2, scan);
    require_zero_one(out, "sym:" + d, tilde_spec(n, degree), r);
    // H lies in A_degree, so even representatives are exactly the simples of C(A_degree, H).
    Json even = Json::object(), odd = Json::object();
    for (const auto& e : r.entries) {
      auto& bucket = e.rep.sign() == 1 ? even : odd;
      const auto key = std::to_string(e.nu);
      bucket[key] = bucket.value(key, 0) + 1;
    }
    out.evidence["even_summary"] = even;
    out.evidence["odd_summary"] = odd;
  } else {
    require_minus_one(out, "alt:" + d, tilde_spec(n, degree), category_scan(alt(degree), h, 2, scan));
  }
}

void claim_thm_sl(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const std::size_t n = as_size(p.at("n"), "n"), l = as_size(p.at("l"), "l");
  if (l > n) throw std::invalid_argument("need l <= n");
  const auto r = category_scan(sym(n), sym_embed(l, n), 2, scan);
  const std::string gs = "sym:" + std::to_string(n), hs = "sym-embed:" + std::to_string(l) + "," + std::to_string(n);
  out.evidence["scans"].push_back(scan_json(gs, hs, r));
  std::map<Permutation, std::set<long long>> by_coset;
  for (const auto& e : r.entries) by_coset[e.rep].insert(e.nu);
  std::size_t null_cosets = 0;
  for (const auto& [rep, values] : by_coset) {
    std::string problem;
    if (values.size() != 1) {
      problem = "values differ within the coset";
    } else {
      const long long v = *values.begin();
      null_cosets += v == 0 ? 1 : 0;
      if (v != 0 && v != 1) {
        problem = "value " + std::to_string(v);
      } else if ((v == 0) != is_null_coset_Sl(rep, l)) {
        problem = "value " + std::to_string(v) + " disagrees with the normal-form classification";
      }
    }
    if (!problem.empty()) {
      out.status = ClaimStatus::fail;
      if (out.counterexamples.size() < kMaxCounterexamples) {
        out.counterexamples.push_back("g=" + rep.to_string() + ": " + problem);
      }
    }
  }
  out.evidence["null_cosets"] = null_cosets;
  out.detail = std::to_string(by_coset.size()) + " double cosets, " + std::to_string(null_cosets) + " null";
}

// Cycle type of the normal form, e.g. "3+2+2".
std::string shape(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : p.cycles()) lengths.push_back(c.size());
  std::sort(lengths.rbegin(), lengths.rend());
  std::string s;
  for (auto k : lengths) s += (s.empty() ? "" : "+") + std::to_string(k);
  return s.empty() ? "1" : s;
}

void claim_census(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const std::size_t l = as_size(p.at("l"), "l"), n = as_size(p.at("n"), "n");
  if (l > n) throw std::invalid_argument("need l <= n");
  std::optional<Census> expected;
  if (l == 3 && n == 6) expected = Census{34, 20};
  if (l == 4 && n == 8) expected = Census{197, 154};
  if (l + 2 == n && n >= 4 && n <= 8) expected = Census{7, 2};

  const auto dc = double_cosets(sym(n), sym_embed(l, n), scan.limits);
  Census measured{dc.cosets.size(), 0};
  std::map<std::string, std::uint64_t> null_shapes;
  for (const auto& c : dc.cosets) {
    if (is_null_coset_Sl(c.rep, l)) {
      ++measured.null;
      ++null_shapes[shape(normal_form_Sl(c.rep, l))];
    }
  }
  out.evidence["total"] = measured.total;
  out.evidence["null"] = measured.null;
  out.evidence["null_by_normal_form_shape"] = null_shapes;
  out.detail = std::to_string(measured.total) + "," + std::to_string(measured.null);
  if (expected) {
    out.evidence["expected_total"] = expected->total;
    out.evidence["expected_null"] = expected->null;
    if (!(measured == *expected)) {
      out.status = ClaimStatus::fail;
      out.counterexamples.push_back("(l, n) = (" + std::to_string(l) + ", " + std::to_string(n) + "): expected (" +
                                    std::to_string(expected->total) + ", " + std::to_string(expected->null) +
                                    "), measured (" + std::to_string(measured.total) + ", " +
                                    std::to_string(measured.null) + ")");
    }
  } else {
    out.evidence["expected_total"] = nullptr;
    out.evidence["expected_null"] = nullptr;
  }
  // Independent count from normal forms over all of S_n, when S_n is enumerable.
  std::uint64_t factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) factorial *= k;
  if (factorial <= scan.limits.enumeration_bound) {
    const Census forms = census_normal_form(l, n, scan.limits);
    out.evidence["normal_form_total"] = forms.total;
    out.evidence["normal_form_null"] = forms.null;
    if (!(forms == measured)) {
      out.status = ClaimStatus::fail;
      out.counterexamples.push_back("orbit count (" + std::to_string(measured.total) + ", " +
                                    std::to_string(measured.null) + ") differs from normal-form count (" +
                                    std::to_string(forms.total) + ", " + std::to_string(forms.null) + ")");
    }
  }
}

void claim_thm_an(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const std::size_t n = as_size(p.at("n"), "n");
  if (n < 2) throw std::invalid_argument("need n >= 2");
  const std::string d = std::to_string(n);
  require_zero_one(out, "sym:" + d, "alt:" + d, category_scan(sym(n), alt(n), 2, scan));
}

void claim_thm_al(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const std::size_t n = as_size(p.at("n"), "n"), l = as_size(p.at("l"), "l");
  if (l >= n) throw std::invalid_argument("need l < n");
  require_zero_one(out, "sym:" + std::to_string(n), "alt-embed:" + std::to_string(l) + "," + std::to_string(n),
                   category_scan(sym(n), alt_embed(l, n), 2, scan));
}

void claim_thm_cn(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const std::size_t n = as_size(p.at("n"), "n");
  if (n % 4 == 0) throw std::invalid_argument("the statement assumes 4 does not divide n");
  const std::string d = std::to_string(n);
  require_zero_one(out, "sym:" + d, "cyclic:" + d, category_scan(sym(n), cyclic(n), 2, scan));
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void claim_ex_nu_p(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const long long n = p.at("n"), l = p.at("l"), prime = p.at("p");
  if (l < 1 || l >= n) throw std::invalid_argument("need 1 <= l < n");
  if (!is_prime(prime)) throw std::invalid_argument("p must be prime");
  if (l + prime <= n) throw std::invalid_argument("need l + p > n");
  // g = (l, l+1) moves one letter beyond l.
  if (1 >= prime - l) throw std::invalid_argument("need p - l > 1");
  const auto h = sym_embed(static_cast<std::size_t>(l), static_cast<std::size_t>(n));
  const auto g = Permutation::from_cycles({{static_cast<int>(l), static_cast<int>(l + 1)}}, static_cast<std::size_t>(n));
  const bool witness = vanishing_witness(g, h, prime, scan.limits);
  const auto stab = stabilizer(g, h, scan.limits);
  const auto table = scan.cache ? scan.cache->get(stab.group)
                                : std::make_shared<const CharacterTable>(character_table(stab.group));
  const auto values = nu_m_general_all(g, *table, h, prime, scan.limits);
  out.evidence["g"] = g.to_string();
  out.evidence["stab_order"] = stab.group.order();
  out.evidence["witness"] = witness;
  out.evidence["values"] = values;
  if (witness) {
    out.status = ClaimStatus::fail;
    out.counterexamples.push_back("some x in H has (gx)^p in H");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) {
      out.status = ClaimStatus::fail;
      out.counterexamples.push_back("chi=" + std::to_string(i) + " nu=" + std::to_string(values[i]));
    }
  }
  out.detail = "g=" + g.to_string() + ", " + std::to_string(values.size()) + " characters, witness " +
               (witness ? "found" : "none");
}

void claim_ex_minus_one(VerificationReport& out, const ClaimParams&, const ScanOptions& scan) {
  const auto t = Permutation::from_cycles({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}}, 12);
  const auto g = Permutation::from_cycles({{1, 2, 7, 8}, {3, 11, 9, 5}, {4, 12, 10, 6}}, 12);
  const auto h = cyclic(12);
  auto fail = [&](const std::string& why) {
    out.status = ClaimStatus::fail;
    out.counterexamples.push_back(why);
  };
  // (conjugate, expected cycles or "" when only non-membership is checked)
  struct Conj {
    std::string label;
    Permutation value;
    std::string expected;
  };
  const Permutation gi = g.inverse();
  const std::vector<Conj> conjugates{
      {"g^-1 t g", conjugate(gi, t), "(1,5,6,9,10,2,7,11,12,3,4,8)"},
      {"g^-1 t^2 g", conjugate(gi, t.pow(2)), "(1,6,10,7,12,4)(2,11,3,8,5,9)"},
      {"g^-1 t^3 g", conjugate(gi, t.pow(3)), ""},
      {"g t^4 g^-1", conjugate(g, t.pow(4)), "(1,10,12)(2,3,5)(4,6,7)(8,9,11)"},
  };
  Json list = Json::array();
  for (const auto& c : conjugates) {
    const bool inside = h.contains(c.value);
    list.push_back({{"label", c.label}, {"value", c.value.to_string()}, {"in_H", inside}});
    if (inside) fail(c.label + " lies in H");
    if (!c.expected.empty() && c.value.to_string() != c.expected) {
      fail(c.label + " = " + c.value.to_string() + ", expected " + c.expected);
    }
  }
  out.evidence["conjugates"] = list;
  if (g * g != t.pow(6)) fail("g^2 differs from t^6");
  const auto stab = stabilizer(g, h, scan.limits);
  out.evidence["stab_order"] = stab.group.order();
  if (stab.group.order() != 2 || !stab.group.contains(g * g)) fail("S(g) is not <g^2> of order 2");
  const auto table = scan.cache ? scan.cache->get(stab.group)
                                : std::make_shared<const CharacterTable>(character_table(stab.group));
  const auto values = nu_m_general_all(g, *table, h, 2, scan.limits);
  const auto via_stab = nu2_stab_all(g, *table, h);
  out.evidence["values"] = values;
  if (values != via_stab) fail("sum over H and sum over S disagree");
  if (values.size() != 2 || values[1] != -1) fail("nontrivial character does not give -1");
  out.evidence["g"] = g.to_string();
  out.detail = "nu_2(g, nontrivial) = " + (values.size() == 2 ? std::to_string(values[1]) : std::string("?"));
}

void claim_gap_s8c8(VerificationReport& out, const ClaimParams&, const ScanOptions& scan) {
  const auto r = category_scan(sym(8), cyclic(8), 2, scan);
  out.evidence["scans"].push_back(scan_json("sym:8", "cyclic:8", r));
  out.evidence["min"] = r.min_value();
  for (const auto& e : r.entries) {
    if (e.nu < 0 && out.counterexamples.size() < kMaxCounterexamples) out.counterexamples.push_back(describe(e));
  }
  if (r.min_value() < 0) out.status = ClaimStatus::fail;
  out.detail = "minimum nu_2 = " + std::to_string(r.min_value());
}

void claim_thm_tilde(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const long long n = p.at("n");
  check_tilde(out, n, n, kTildeExceptions.count(n) != 0, scan);
}

void claim_thm_tilde_plus1(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const long long n = p.at("n");
  check_tilde(out, n, n + 1, kTildePlusOneExceptions.count(n) != 0, scan);
}

void claim_thm_tilde_plusk(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const long long n = p.at("n"), k = p.at("k");
  if (k < 2) throw std::invalid_argument("need k >= 2");
  check_tilde(out, n, n + k, kTildePlusKExceptions.count(n) != 0, scan);
}

void claim_lemma_twisted(VerificationReport& out, const ClaimParams& p, const ScanOptions& scan) {
  const std::size_t n = as_size(p.at("n"), "n");
  if (n < 2) throw std::invalid_argument("need n >= 2");
  const auto h = alt(n);
  const auto sigma = Permutation::from_cycles({{1, 2}}, n);
  const auto table = scan.cache ? scan.cache->get(h) : std::make_shared<const CharacterTable>(character_table(h));
  const auto values = nu2_stab_all(sigma, *table, h);
  // Same numbers as conjugation-twisted indicators, since sigma^2 = e.
  if (values != nu_tau_twisted_all(*table, sigma)) {
    out.status = ClaimStatus::fail;
    out.counterexamples.push_back("sum over A_n and twisted indicator disagree");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0 && values[i] != 1) {
      out.status = ClaimStatus::fail;
      out.counterexamples.push_back("chi=" + std::to_string(i) + " nu=" + std::to_string(values[i]));
    }
  }
  out.evidence["sigma"] = sigma.to_string();
  out.evidence["values"] = values;
  out.detail = std::to_string(values.size()) + " characters of A_" + std::to_string(n);
}

using ClaimFn = std::function<void(VerificationReport&, const ClaimParams&, const ScanOptions&)>;

const std::map<std::string, ClaimFn>& claim_functions() {
  static const std::map<std::string, ClaimFn> fns{
      {"thm-Sl", claim_thm_sl},
      {"census", claim_census},
      {"thm-An", claim_thm_an},
      {"thm-Al", claim_thm_al},
      {"thm-Cn", claim_thm_cn},
      {"ex-nu-p", claim_ex_nu_p},
      {"ex-minus-one", claim_ex_minus_one},
      {"gap-s8c8", claim_gap_s8c8},
      {"thm-tilde", claim_thm_tilde},
      {"thm-tilde-plus1", claim_thm_tilde_plus1},
      {"thm-tilde-plusk", claim_thm_tilde_plusk},
      {"lemma-twisted-An", claim_lemma_twisted},
  };
  return fns;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() { return kRegistry; }

VerificationReport verify(const std::string& claim_id, const ClaimParams& params, const CatalogOptions& options) {
  const auto info = std::find_if(kRegistry.begin(), kRegistry.end(), [&](const ClaimInfo& c) { return c.id == claim_id; });
  if (info == kRegistry.end()) throw std::invalid_argument("unknown claim id '" + claim_id + "'");
  ClaimParams full = info->defaults;
  for (const auto& [key, value] : params) {
    if (std::find(info->params.begin(), info->params.end(), key) == info->params.end()) {
      throw std::invalid_argument("claim '" + claim_id + "' takes no parameter '" + key + "'");
    }
    full[key] = value;
  }

  VerificationReport out;
  out.claim_id = claim_id;
  out.statement = info->statement;
  out.params = full;
  out.status = ClaimStatus::pass;
  const auto start = std::chrono::steady_clock::now();
  try {
    claim_functions().at(claim_id)(out, full, options.scan);
  } catch (const BoundExceeded& e) {
    out.status = ClaimStatus::skipped;
    out.detail = e.what();
    out.evidence = Json::object();
    out.evidence["bound"] = e.bound_name();
    out.evidence["requested"] = e.requested();
    out.evidence["limit"] = e.limit();
    out.counterexamples.clear();
  }
  out.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.detail.empty() && out.evidence.contains("scans")) {
    const auto& last = out.evidence["scans"].back();
    out.detail = "C(" + last["G"].get<std::string>() + ", " + last["H"].get<std::string>() +
                 "): values " + last["summary"].dump();
  }
  return out;
}

std::vector<ClaimInstance> profile_instances(const std::string& profile) {
  if (profile != "quick" && profile != "full") throw std::invalid_argument("unknown profile '" + profile + "'");
  std::vector<ClaimInstance> out{
      {"thm-Sl", {{"n", 6}, {"l", 3}}},
      {"thm-Sl", {{"n", 7}, {"l", 5}}},
      {"census", {{"l", 3}, {"n", 6}}},
  };
  for (long long n = 4; n <= 7; ++n) out.push_back({"census", {{"l", n - 2}, {"n", n}}});
  for (long long n = 5; n <= 7; ++n) out.push_back({"thm-An", {{"n", n}}});
  out.push_back({"thm-Al", {{"n", 6}, {"l", 4}}});
  out.push_back({"thm-Al", {{"n", 7}, {"l", 5}}});
  for (long long n : {3, 5, 6, 7}) out.push_back({"thm-Cn", {{"n", n}}});
  out.push_back({"ex-nu-p", {{"n", 7}, {"l", 5}, {"p", 7}}});
  for (long long n = 4; n <= 7; ++n) out.push_back({"thm-tilde", {{"n", n}}});
  for (long long n = 4; n <= 6; ++n) out.push_back({"thm-tilde-plus1", {{"n", n}}});
  out.push_back({"thm-tilde-plusk", {{"n", 4}, {"k", 2}}});
  out.push_back({"thm-tilde-plusk", {{"n", 5}, {"k", 2}}});
  for (long long n = 5; n <= 7; ++n) out.push_back({"lemma-twisted-An", {{"n", n}}});
  if (profile == "full") {
    out.push_back({"thm-Sl", {{"n", 8}, {"l", 4}}});
    out.push_back({"census", {{"l", 4}, {"n", 8}}});
    out.push_back({"census", {{"l", 6}, {"n", 8}}});
    out.push_back({"thm-An", {{"n", 8}}});
    out.push_back({"thm-Al", {{"n", 8}, {"l", 5}}});
    out.push_back({"ex-minus-one", {}});
    out.push_back({"gap-s8c8", {}});
    for (long long n = 8; n <= 11; ++n) out.push_back({"thm-tilde", {{"n", n}}});
    for (long long n = 7; n <= 10; ++n) out.push_back({"thm-tilde-plus1", {{"n", n}}});
    out.push_back({"thm-tilde-plusk", {{"n", 6}, {"k", 2}}});
    out.push_back({"thm-tilde-plusk", {{"n", 7}, {"k", 2}}});
    out.push_back({"thm-tilde-plusk", {{"n", 6}, {"k", 3}}});
    for (long long n = 8; n <= 9; ++n) out.push_back({"lemma-twisted-An", {{"n", n}}});
  }
  return out;
}

std::vector<VerificationReport> run_all(const std::string& profile, const CatalogOptions& options) {
  const auto instances = profile_instances(profile);
  CatalogOptions opts = options;
  if (!opts.scan.cache) opts.scan.cache = std::make_shared<TableCache>(TableOptions{opts.scan.limits, opts.scan.seed});
  unsigned workers = opts.scan.threads ? opts.scan.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, instances.size()));
  std::vector<VerificationReport> out(instances.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) out[i] = verify(instances[i].claim_id, instances[i].params, opts);
    return out;
  }
  // Claims in parallel, each scan single-threaded; results keep registry order.
  opts.scan.threads = 1;
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(instances.size());
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      try {
        out[i] = verify(instances[i].claim_id, instances[i].params, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < workers; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace fsind
