#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fsind/limits.hpp"
#include "fsind/permutation.hpp"

namespace fsind {

/// One level of a stabilizer chain: the orbit of `base` under the pointwise
/// stabilizer of all earlier base points, with a transversal element u_p
/// (u_p(base) = p) for every orbit point p.
struct BsgsLevel {
  Point base = 0;
  std::vector<Point> orbit;
  std::vector<std::optional<Permutation>> transversal;
  std::vector<Permutation> generators;
};

/// Base and strong generating set, built by Knuth's variant of Schreier-Sims.
class Bsgs {
 public:
  Bsgs(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<BsgsLevel>& levels() const noexcept { return levels_; }

  /// Exact order; throws std::overflow_error past 2^64 - 1.
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  /// Adds a generator; returns false if it was already a member.
  bool add_generator(const Permutation& g);

 private:
  bool member_from(std::size_t level, Permutation g) const;
  void add_at(std::size_t level, const Permutation& g);
  void extend_orbit(std::size_t level, const Permutation& h);

  std::size_t degree_;
  std::vector<BsgsLevel> levels_;
};

/**
 * A subgroup of S_n given by generators.
 *
 * The stabilizer chain is built eagerly in the constructor, so a constructed
 * group is immutable. The element list is built on first request and shared by
 * copies of the group; that initialization is internally synchronized.
 */
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  /// Group whose element set is exactly `elements` (which must be closed under
  /// multiplication). Generators are picked greedily and the list is kept.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Bsgs& bsgs() const noexcept { return *bsgs_; }

  std::uint64_t order() const { return order_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  Permutation identity() const { return Permutation(degree_); }

  /// All elements in lexicographic order of image arrays (identity first).
  const std::vector<Permutation>& elements(const Limits& limits = {}) const;
  /// Position of `p` in elements(); requires elements() to have been built.
  std::optional<std::size_t> index_of(const Permutation& p) const;

 private:
  struct ElementCache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const Bsgs> bsgs_;
  std::uint64_t order_ = 1;
  std::shared_ptr<ElementCache> cache_;
};

std::uint64_t group_order(const PermGroup& g);
bool member(const PermGroup& g, const Permutation& p);

}  // namespace fsind
