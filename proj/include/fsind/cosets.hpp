#pragma once

#include <cstdint>
#include <vector>

#include "fsind/limits.hpp"
#include "fsind/perm_group.hpp"

namespace fsind {

/// Canonical representative of the coset gH: the identity when g is in H,
/// otherwise the element of gH minimizing its images of H's base points in turn.
Permutation coset_rep(const Permutation& g, const PermGroup& h);

/**
 * One representative per coset gH of H in G, identity first, found by
 * breadth-first search over G's generators. Throws BoundExceeded when
 * [G:H] exceeds limits.index_bound.
 */
std::vector<Permutation> right_transversal(const PermGroup& g, const PermGroup& h, const Limits& limits = {});

struct DoubleCoset {
  Permutation rep;
  std::uint64_t size = 0;
  /// Positions in the transversal of the cosets gH making up HgH.
  std::vector<std::uint32_t> transversal_indices;
};

/// H\G/H as orbits of H on the cosets gH. Each representative is the
/// lexicographically least transversal element of its orbit; double cosets
/// are sorted by representative, so H itself comes first.
struct DoubleCosetDecomposition {
  std::vector<Permutation> transversal;
  std::vector<DoubleCoset> cosets;
};

DoubleCosetDecomposition double_cosets(const PermGroup& g, const PermGroup& h, const Limits& limits = {});

/// S(g) = {x in H : g^-1 x g in H}, the stabilizer of gH in H.
struct Stabilizer {
  Permutation g;
  PermGroup group;
};

Stabilizer stabilizer(const Permutation& g, const PermGroup& h, const Limits& limits = {});

// Double cosets of S_l (on the first l letters) in S_n. A letter is "small"
// when it is at most l.

struct NormalForm {
  Permutation form;
  /// Element s of S_l with form = sigma * s.
  Permutation multiplier;
};

/// Splits cycles holding two or more small letters, always taking the cycle
/// whose least small letter is smallest and right-multiplying by the
/// transposition of its two least small letters, until every cycle holds at
/// most one small letter.
NormalForm normal_form_Sl_tracked(const Permutation& sigma, std::size_t l);
Permutation normal_form_Sl(const Permutation& sigma, std::size_t l);

/// Normal form with the small letters renamed 1, 2, ... in order of first
/// appearance, reading cycles by their least large letter. Equal for two
/// permutations iff they lie in the same double coset.
Permutation relabeled_normal_form_Sl(const Permutation& sigma, std::size_t l);

/// True iff the normal form is not a product of disjoint transpositions.
bool is_null_coset_Sl(const Permutation& sigma, std::size_t l);

struct Census {
  std::uint64_t total = 0;
  std::uint64_t null = 0;
  friend bool operator==(const Census&, const Census&) = default;
};

/// Counts S_l double cosets in S_n and the null ones among them, via orbits.
Census census_Sl(std::size_t l, std::size_t n, const Limits& limits = {});
/// The same counts from distinct relabeled normal forms over all of S_n.
Census census_normal_form(std::size_t l, std::size_t n, const Limits& limits = {});

}  // namespace fsind
