#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fsind/character.hpp"
#include "fsind/cosets.hpp"

namespace fsind {

// Simples of C(G,H) are pairs (g, chi) with g a double coset representative
// and chi an irreducible character of S(g) = Stab_H(gH). Functions taking a
// Character expect it to live on S(g); its group is checked against S(g) by
// generators (and by order where the full stabilizer is enumerated anyway).

/**
 * nu_m(g, chi) = (1/|S(g)|) sum over x in H with (gx)^m in H of
 * conj(chi)((gx)^m).
 *
 * The sum runs over all of H, so this is the reference formula. Throws
 * ConsistencyError if the result is not a rational integer.
 */
long long nu_m_general(const Permutation& g, const Character& chi, const PermGroup& h, long long m,
                       const Limits& limits = {});
/// nu_m_general for every row of `table` (a table of S(g)), sharing one pass over H.
std::vector<long long> nu_m_general_all(const Permutation& g, const CharacterTable& table, const PermGroup& h,
                                        long long m, const Limits& limits = {});

/**
 * nu_2(g, chi) = (1/|S|) sum_{x in S} chi((gx)^2) for g outside H with g^2 in
 * H. Only S is enumerated. Throws HypothesisError if g is in H or g^2 is not.
 */
long long nu2_stab(const Permutation& g, const Character& chi, const PermGroup& h);
std::vector<long long> nu2_stab_all(const Permutation& g, const CharacterTable& table, const PermGroup& h);

/// S-hat = S u gS, a group containing S with index 2.
struct HatS {
  PermGroup s;
  Permutation g;
  PermGroup group;
};

/// Throws HypothesisError unless g is outside S, g^2 is in S and g normalizes S.
HatS hat_S(const Permutation& g, const PermGroup& s);

/// (1/|S|) sum_{x in S-hat} chi(x^2) - nu_2(chi).
long long nu2_hat(const HatS& hat, const Character& chi);
/// nu_2(Ind chi) - nu_2(chi); `hat_classes` are the classes of hat.group.
long long nu2_induced(const HatS& hat, const Character& chi, const ClassDataPtr& hat_classes);
/**
 * 2 nu_2(chi-hat) - nu_2(chi) if chi is invariant under conjugation by g,
 * otherwise nu_2(chi-hat) - nu_2(chi), where chi-hat is the first row of
 * `hat_table` whose restriction contains chi.
 */
long long nu2_extension(const HatS& hat, const Character& chi, const CharacterTable& hat_table);

/// Every nu_2 formula evaluated on one simple with g outside H, g^2 in H.
struct Nu2Paths {
  std::size_t chi = 0;
  long long general = 0;    // sum over H
  long long stab = 0;       // sum over S
  long long hat = 0;        // sum over S-hat
  long long induced = 0;    // induced character
  long long extension = 0;  // irreducible of S-hat over chi
  bool agree() const { return general == stab && stab == hat && hat == induced && induced == extension; }
};

/// All five formulas for every chi in Irr(S(g)). Tables come from `cache`.
std::vector<Nu2Paths> nu2_all_paths(const Permutation& g, const PermGroup& h, TableCache& cache,
                                    const Limits& limits = {});

/**
 * Twisted indicator (1/|S|) sum_{x in S} chi(x tau(x)) with tau(x) = u x u^-1.
 * Throws HypothesisError unless u normalizes S and u^2 centralizes S.
 */
long long nu_tau_twisted(const Character& chi, const Permutation& u);
std::vector<long long> nu_tau_twisted_all(const CharacterTable& table, const Permutation& u);

/// True iff some x in H has (gx)^m in H. False means every nu_m(g, .) is 0.
bool vanishing_witness(const Permutation& g, const PermGroup& h, long long m, const Limits& limits = {});

/**
 * An element of gH with square in H and order a power of two: the first
 * g' = gx (x in H, identity first) with g'^2 in H, raised to the odd part of
 * its order. Empty if no such g' exists.
 */
std::optional<Permutation> normalize_rep_order2(const Permutation& g, const PermGroup& h,
                                                const Limits& limits = {});

/// Outcome of checking that elements commuting with H leave indicators alone.
struct InvarianceReport {
  /// Failed hypotheses; when non-empty nothing else was checked.
  std::vector<std::string> violations;
  bool stabilizer_equal = false;
  bool values_equal = false;
  std::vector<long long> values;          // nu_m(g, chi) over Irr(S(g))
  std::vector<long long> shifted_values;  // nu_m(u g u^-1, chi)
  /// Set when u g = g u and u^m = e, so that u g was compared as well.
  bool product_checked = false;
  bool product_stabilizer_equal = false;
  bool product_values_equal = false;
  std::vector<long long> product_values;  // nu_m(u g, chi)
  bool ok() const {
    return violations.empty() && stabilizer_equal && values_equal &&
           (!product_checked || (product_stabilizer_equal && product_values_equal));
  }
};

/// Requires every generator of H to commute with u.
InvarianceReport invariance_shift(const Permutation& u, const Permutation& g, const PermGroup& h, long long m,
                                  TableCache& cache, const Limits& limits = {});

/// Outcome of comparing nu_2(tf, chi, H) with nu_2(f, chi, H') for H' = Stab_H(tH).
struct ReductionReport {
  std::vector<std::string> violations;
  std::uint64_t h_prime_order = 0;
  std::uint64_t stab_order = 0;
  bool stabilizer_equal = false;
  bool values_equal = false;
  std::vector<long long> lhs;  // nu_2(tf, chi, H)
  std::vector<long long> rhs;  // nu_2(f, chi, H')
  bool ok() const { return violations.empty() && stabilizer_equal && values_equal; }
};

/**
 * Checks t^2 = e, H <= F, F meets t H t^-1 inside H, t centralizes
 * H' = Stab_H(tH), f in F, f^2 in H and ft = tf; then compares
 * Stab_H(tfH) with Stab_H'(fH') and the indicators on both sides.
 */
ReductionReport reduction_tf(const Permutation& t, const Permutation& f, const PermGroup& h, const PermGroup& f_group,
                             TableCache& cache, const Limits& limits = {});

enum class IndicatorPath {
  classical,  // g in H: classical indicator of H
  vanishing,  // no x in H with (gx)^m in H
  stab,       // m = 2: sum over S after normalizing g
  general,    // sum over H
};
std::string to_string(IndicatorPath path);

struct IndicatorEntry {
  Permutation rep;
  std::uint64_t coset_size = 0;
  std::uint64_t stab_order = 0;
  std::size_t chi = 0;  // row of the table of S(rep)
  long long chi_degree = 0;
  long long nu = 0;
  IndicatorPath path = IndicatorPath::general;
};

struct IndicatorReport {
  std::uint64_t g_order = 0;
  std::uint64_t h_order = 0;
  std::size_t num_double_cosets = 0;
  long long m = 2;
  /// Ordered by double coset (as in double_cosets) and then by character.
  std::vector<IndicatorEntry> entries;
  std::map<long long, std::uint64_t> summary;

  bool contains(long long value) const { return summary.count(value) != 0; }
  long long min_value() const;
  long long max_value() const;
};

struct ScanOptions {
  Limits limits;
  std::uint64_t seed = 1;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
  /// Shared table cache; a private one is used when null.
  std::shared_ptr<TableCache> cache;
};

/**
 * Every simple of C(G,H) with its nu_m. Per double coset: the classical
 * indicator when the representative is in H; for m = 2 the sum over S after
 * normalize_rep_order2 (all zero when it finds nothing); otherwise the sum
 * over H. For m = 2 each value must be -1, 0 or 1 (ConsistencyError otherwise).
 */
IndicatorReport category_scan(const PermGroup& g, const PermGroup& h, long long m, const ScanOptions& options = {});

}  // namespace fsind
