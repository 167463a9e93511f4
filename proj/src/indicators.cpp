#include "fsind/indicators.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fsind {

namespace {

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Permutation& x) { return b.contains(x); });
}

void check_degree(const Permutation& g, const PermGroup& h, const char* where) {
  if (g.degree() != h.degree()) throw std::invalid_argument(std::string(where) + ": degree mismatch");
}

long long to_integer(const Cyclotomic& value, const char* what) {
  auto n = value.as_rational_integer();
  if (!n) throw ConsistencyError(std::string(what) + " is not an integer: " + value.to_string());
  return *n;
}

// (1/order) sum_c counts[c] chi[c], or with conj(chi) when `conjugate` is set.
long long class_sum(const std::vector<std::uint64_t>& counts, const Character& chi, std::uint64_t order,
                    bool conjugate, const char* what) {
  CyclotomicSum sum;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] == 0) continue;
    sum.add(conjugate ? chi[c].conj() : chi[c], mpq_class(static_cast<unsigned long>(counts[c])));
  }
  return to_integer(sum.result().scaled(mpq_class(1, static_cast<unsigned long>(order))), what);
}

std::vector<long long> class_sums(const std::vector<std::uint64_t>& counts, const CharacterTable& table,
                                  bool conjugate, const char* what) {
  std::vector<long long> out;
  out.reserve(table.size());
  for (const auto& chi : table.rows()) out.push_back(class_sum(counts, chi, table.group().order(), conjugate, what));
  return out;
}

// Every generator x of s satisfies x in H and g^-1 x g in H.
void check_inside_stabilizer(const Permutation& g, const PermGroup& s, const PermGroup& h, const char* where) {
  const Permutation g_inv = g.inverse();
  for (const auto& x : s.generators()) {
    if (!h.contains(x) || !h.contains(g_inv * x * g)) {
      throw std::invalid_argument(std::string(where) + ": character group is not contained in S(g)");
    }
  }
}

CharacterTable single_row(const Character& chi) { return CharacterTable(chi.classes(), {chi}); }

}  // namespace

std::vector<long long> nu_m_general_all(const Permutation& g, const CharacterTable& table, const PermGroup& h,
                                        long long m, const Limits& limits) {
  if (m < 1) throw std::invalid_argument("nu_m: m must be positive");
  check_degree(g, h, "nu_m");
  const auto& cd = *table.classes();
  const PermGroup& s = cd.group();
  check_inside_stabilizer(g, s, h, "nu_m");
  const Permutation g_inv = g.inverse();
  std::vector<std::uint64_t> counts(cd.num_classes(), 0);
  std::uint64_t stab_size = 0;
  for (const auto& x : h.elements(limits)) {
    if (h.contains(g_inv * x * g)) ++stab_size;
    const Permutation y = (g * x).pow(m);
    if (!h.contains(y)) continue;
    const auto c = cd.find_class(y);
    if (!c) throw std::invalid_argument("nu_m: (gx)^m lies in H but outside the character group");
    ++counts[*c];
  }
  if (stab_size != s.order()) throw std::invalid_argument("nu_m: character group is smaller than S(g)");
  return class_sums(counts, table, true, "nu_m");
}

long long nu_m_general(const Permutation& g, const Character& chi, const PermGroup& h, long long m,
                       const Limits& limits) {
  return nu_m_general_all(g, single_row(chi), h, m, limits).front();
}

std::vector<long long> nu2_stab_all(const Permutation& g, const CharacterTable& table, const PermGroup& h) {
  check_degree(g, h, "nu2_stab");
  if (h.contains(g)) throw HypothesisError("nu2_stab: g lies in H");
  if (!h.contains(g * g)) throw HypothesisError("nu2_stab: g^2 does not lie in H");
  const auto& cd = *table.classes();
  check_inside_stabilizer(g, cd.group(), h, "nu2_stab");
  std::vector<std::uint64_t> counts(cd.num_classes(), 0);
  for (const auto& x : cd.group().elements()) {
    const Permutation gx = g * x;
    const auto c = cd.find_class(gx * gx);
    if (!c) throw std::invalid_argument("nu2_stab: (gx)^2 leaves the character group");
    ++counts[*c];
  }
  return class_sums(counts, table, false, "nu2_stab");
}

long long nu2_stab(const Permutation& g, const Character& chi, const PermGroup& h) {
  return nu2_stab_all(g, single_row(chi), h).front();
}

HatS hat_S(const Permutation& g, const PermGroup& s) {
  check_degree(g, s, "hat_S");
  if (s.contains(g)) throw HypothesisError("hat_S: g lies in S");
  if (!s.contains(g * g)) throw HypothesisError("hat_S: g^2 does not lie in S");
  for (const auto& x : s.generators()) {
    if (!s.contains(conjugate(g, x))) throw HypothesisError("hat_S: g does not normalize S");
  }
  auto gens = s.generators();
  gens.push_back(g);
  PermGroup group(s.degree(), std::move(gens));
  if (group.order() != 2 * s.order()) throw ConsistencyError("hat_S: S u gS is not a group of index 2 over S");
  return {s, g, std::move(group)};
}

long long nu2_hat(const HatS& hat, const Character& chi) {
  const auto& cd = *chi.classes();
  if (!same_group(cd.group(), hat.s)) throw std::invalid_argument("nu2_hat: character is not of S");
  std::vector<std::uint64_t> counts(cd.num_classes(), 0);
  for (const auto& x : hat.group.elements()) ++counts[cd.class_of(x * x)];
  return class_sum(counts, chi, cd.group_order(), false, "nu2_hat") - nu_classical(chi, 2);
}

long long nu2_induced(const HatS& hat, const Character& chi, const ClassDataPtr& hat_classes) {
  if (!same_group(chi.classes()->group(), hat.s)) throw std::invalid_argument("nu2_induced: character is not of S");
  if (!same_group(hat_classes->group(), hat.group)) throw std::invalid_argument("nu2_induced: classes are not of S-hat");
  return nu_classical(induce(chi, hat_classes), 2) - nu_classical(chi, 2);
}

long long nu2_extension(const HatS& hat, const Character& chi, const CharacterTable& hat_table) {
  if (!same_group(chi.classes()->group(), hat.s)) throw std::invalid_argument("nu2_extension: character is not of S");
  if (!same_group(hat_table.group(), hat.group)) throw std::invalid_argument("nu2_extension: table is not of S-hat");
  const Character* above = nullptr;
  for (const auto& row : hat_table.rows()) {
    if (!inner_product(restrict(row, chi.classes()), chi).is_zero()) {
      above = &row;
      break;
    }
  }
  if (!above) throw ConsistencyError("nu2_extension: no irreducible of S-hat lies over chi");
  const auto& cd = *chi.classes();
  const Permutation g_inv = hat.g.inverse();
  bool invariant = true;
  for (std::size_t c = 0; c < cd.num_classes() && invariant; ++c) {
    invariant = chi.value(g_inv * cd.reps()[c] * hat.g) == chi[c];
  }
  const long long top = nu_classical(*above, 2);
  return (invariant ? 2 * top : top) - nu_classical(chi, 2);
}

std::vector<Nu2Paths> nu2_all_paths(const Permutation& g, const PermGroup& h, TableCache& cache,
                                    const Limits& limits) {
  check_degree(g, h, "nu2_all_paths");
  if (h.contains(g)) throw HypothesisError("nu2_all_paths: g lies in H");
  if (!h.contains(g * g)) throw HypothesisError("nu2_all_paths: g^2 does not lie in H");
  const auto stab = stabilizer(g, h, limits);
  const auto table = cache.get(stab.group);
  const HatS hat = hat_S(g, table->group());
  const auto hat_table = cache.get(hat.group);
  const auto general = nu_m_general_all(g, *table, h, 2, limits);
  const auto via_stab = nu2_stab_all(g, *table, h);
  std::vector<Nu2Paths> out;
  for (std::size_t i = 0; i < table->size(); ++i) {
    const auto& chi = (*table)[i];
    Nu2Paths p;
    p.chi = i;
    p.general = general[i];
    p.stab = via_stab[i];
    p.hat = nu2_hat(hat, chi);
    p.induced = nu2_induced(hat, chi, hat_table->classes());
    p.extension = nu2_extension(hat, chi, *hat_table);
    out.push_back(p);
  }
  return out;
}

std::vector<long long> nu_tau_twisted_all(const CharacterTable& table, const Permutation& u) {
  const auto& cd = *table.classes();
  const PermGroup& s = cd.group();
  check_degree(u, s, "nu_tau_twisted");
  const Permutation u2 = u * u;
  for (const auto& x : s.generators()) {
    if (!s.contains(conjugate(u, x))) throw HypothesisError("nu_tau_twisted: u does not normalize S");
    if (u2 * x != x * u2) throw HypothesisError("nu_tau_twisted: u^2 does not centralize S");
  }
  std::vector<std::uint64_t> counts(cd.num_classes(), 0);
  for (const auto& x : s.elements()) ++counts[cd.class_of(x * conjugate(u, x))];
  return class_sums(counts, table, false, "twisted indicator");
}

long long nu_tau_twisted(const Character& chi, const Permutation& u) {
  return nu_tau_twisted_all(single_row(chi), u).front();
}

bool vanishing_witness(const Permutation& g, const PermGroup& h, long long m, const Limits& limits) {
  if (m < 1) throw std::invalid_argument("vanishing_witness: m must be positive");
  check_degree(g, h, "vanishing_witness");
  const auto& xs = h.elements(limits);
  return std::any_of(xs.begin(), xs.end(), [&](const Permutation& x) { return h.contains((g * x).pow(m)); });
}

std::optional<Permutation> normalize_rep_order2(const Permutation& g, const PermGroup& h, const Limits& limits) {
  check_degree(g, h, "normalize_rep_order2");
  for (const auto& x : h.elements(limits)) {
    const Permutation gx = g * x;
    if (!h.contains(gx * gx)) continue;
    // ord = 2^k (2l+1); gx (gx^2)^l = gx^(2l+1) stays in gxH.
    std::uint64_t odd = gx.order();
    while (odd % 2 == 0) odd /= 2;
    return gx.pow(static_cast<long long>(odd));
  }
  return std::nullopt;
}

InvarianceReport invariance_shift(const Permutation& u, const Permutation& g, const PermGroup& h, long long m,
                                  TableCache& cache, const Limits& limits) {
  InvarianceReport r;
  if (u.degree() != h.degree() || g.degree() != h.degree()) {
    r.violations.push_back("degree mismatch");
    return r;
  }
  for (const auto& x : h.generators()) {
    if (u * x != x * u) r.violations.push_back("u does not commute with generator " + x.to_string() + " of H");
  }
  if (!r.violations.empty()) return r;

  const auto s = stabilizer(g, h, limits);
  const auto table = cache.get(s.group);
  r.values = nu_m_general_all(g, *table, h, m, limits);

  const Permutation shifted = conjugate(u, g);
  r.stabilizer_equal = same_group(stabilizer(shifted, h, limits).group, s.group);
  if (r.stabilizer_equal) {
    r.shifted_values = nu_m_general_all(shifted, *table, h, m, limits);
    r.values_equal = r.shifted_values == r.values;
  }

  if (u * g == g * u && u.pow(m).is_identity()) {
    r.product_checked = true;
    const Permutation product = u * g;
    r.product_stabilizer_equal = same_group(stabilizer(product, h, limits).group, s.group);
    if (r.product_stabilizer_equal) {
      r.product_values = nu_m_general_all(product, *table, h, m, limits);
      r.product_values_equal = r.product_values == r.values;
    }
  }
  return r;
}

ReductionReport reduction_tf(const Permutation& t, const Permutation& f, const PermGroup& h, const PermGroup& f_group,
                             TableCache& cache, const Limits& limits) {
  ReductionReport r;
  const std::size_t n = h.degree();
  if (t.degree() != n || f.degree() != n || f_group.degree() != n) {
    r.violations.push_back("degree mismatch");
    return r;
  }
  if (!(t * t).is_identity()) r.violations.push_back("t^2 is not the identity");
  if (!h.is_subgroup_of(f_group)) r.violations.push_back("H is not a subgroup of F");
  for (const auto& x : h.elements(limits)) {
    const Permutation y = conjugate(t, x);
    if (f_group.contains(y) && !h.contains(y)) {
      r.violations.push_back("F meets tHt^-1 outside H, e.g. at " + y.to_string());
      break;
    }
  }
  const auto h_prime = stabilizer(t, h, limits);
  r.h_prime_order = h_prime.group.order();
  for (const auto& x : h_prime.group.generators()) {
    if (t * x != x * t) {
      r.violations.push_back("t does not centralize Stab_H(tH)");
      break;
    }
  }
  if (!f_group.contains(f)) r.violations.push_back("f is not in F");
  if (!h.contains(f * f)) r.violations.push_back("f^2 is not in H");
  if (f * t != t * f) r.violations.push_back("f and t do not commute");
  if (!r.violations.empty()) return r;

  const Permutation tf = t * f;
  const auto lhs_stab = stabilizer(tf, h, limits);
  const auto rhs_stab = stabilizer(f, h_prime.group, limits);
  r.stab_order = lhs_stab.group.order();
  r.stabilizer_equal = same_group(lhs_stab.group, rhs_stab.group);
  if (!r.stabilizer_equal) return r;
  const auto table = cache.get(lhs_stab.group);
  r.lhs = nu_m_general_all(tf, *table, h, 2, limits);
  r.rhs = nu_m_general_all(f, *table, h_prime.group, 2, limits);
  r.values_equal = r.lhs == r.rhs;
  return r;
}

std::string to_string(IndicatorPath path) {
  switch (path) {
    case IndicatorPath::classical: return "classical";
    case IndicatorPath::vanishing: return "vanishing";
    case IndicatorPath::stab: return "stab";
    case IndicatorPath::general: return "general";
  }
  return "unknown";
}

long long IndicatorReport::min_value() const {
  if (summary.empty()) throw std::logic_error("empty report");
  return summary.begin()->first;
}

long long IndicatorReport::max_value() const {
  if (summary.empty()) throw std::logic_error("empty report");
  return summary.rbegin()->first;
}

namespace {

std::vector<IndicatorEntry> scan_coset(const DoubleCoset& coset, const PermGroup& h, long long m, TableCache& cache,
                                       const Limits& limits) {
  const Permutation& g = coset.rep;
  std::vector<long long> values;
  IndicatorPath path;
  CharacterTablePtr table;
  if (h.contains(g)) {
    table = cache.get(h);
    path = IndicatorPath::classical;
    for (const auto& chi : table->rows()) values.push_back(nu_classical(chi, m));
  } else {
    table = cache.get(stabilizer(g, h, limits).group);
    if (m == 2) {
      if (auto normalized = normalize_rep_order2(g, h, limits)) {
        path = IndicatorPath::stab;
        values = nu2_stab_all(*normalized, *table, h);
      } else {
        path = IndicatorPath::vanishing;
      }
    } else if (vanishing_witness(g, h, m, limits)) {
      path = IndicatorPath::general;
      values = nu_m_general_all(g, *table, h, m, limits);
    } else {
      path = IndicatorPath::vanishing;
    }
    if (path == IndicatorPath::vanishing) values.assign(table->size(), 0);
  }
  std::vector<IndicatorEntry> out;
  for (std::size_t i = 0; i < table->size(); ++i) {
    if (m == 2 && (values[i] < -1 || values[i] > 1)) {
      throw ConsistencyError("nu_2 = " + std::to_string(values[i]) + " at " + g.to_string());
    }
    out.push_back({g, coset.size, table->group().order(), i, (*table)[i].degree(), values[i], path});
  }
  return out;
}

}  // namespace

IndicatorReport category_scan(const PermGroup& g, const PermGroup& h, long long m, const ScanOptions& options) {
  if (m < 1) throw std::invalid_argument("category_scan: m must be positive");
  auto cache = options.cache;
  if (!cache) cache = std::make_shared<TableCache>(TableOptions{options.limits, options.seed});
  check_enumeration(h.order(), options.limits);
  const auto dc = double_cosets(g, h, options.limits);

  std::vector<std::vector<IndicatorEntry>> per_coset(dc.cosets.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= dc.cosets.size()) return;
      try {
        per_coset[i] = scan_coset(dc.cosets[i], h, m, *cache, options.limits);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = dc.cosets.size();
        return;
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, dc.cosets.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  IndicatorReport report;
  report.g_order = g.order();
  report.h_order = h.order();
  report.num_double_cosets = dc.cosets.size();
  report.m = m;
  for (auto& entries : per_coset) {
    for (auto& e : entries) {
      ++report.summary[e.nu];
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace fsind
