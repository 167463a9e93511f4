#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fsind/limits.hpp"
#include "fsind/perm_group.hpp"

namespace fsind {

/**
 * Conjugacy classes of an enumerable permutation group.
 *
 * Classes are ordered identity first, then by (size, smallest moved point of
 * the representative, representative image array). Each representative is
 * the lexicographically least element of its class.
 */
class ClassData {
 public:
  static std::shared_ptr<const ClassData> compute(const PermGroup& group, const Limits& limits = {});

  const PermGroup& group() const noexcept { return group_; }
  std::size_t num_classes() const noexcept { return reps_.size(); }
  const std::vector<Permutation>& reps() const noexcept { return reps_; }
  const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }
  std::uint64_t group_order() const noexcept { return group_.order(); }

  /// Class of an element of the group; throws std::invalid_argument otherwise.
  std::size_t class_of(const Permutation& p) const;
  std::optional<std::size_t> find_class(const Permutation& p) const;
  /// Class of the i-th element of group().elements().
  std::size_t class_of_element(std::size_t i) const noexcept { return element_class_[i]; }

  /// Class of rep^k.
  std::size_t power_map(std::size_t c, long long k) const;
  std::size_t inverse_class(std::size_t c) const noexcept { return inverse_[c]; }
  std::uint64_t rep_order(std::size_t c) const noexcept { return power_maps_[c].size(); }
  /// lcm of element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }

 private:
  explicit ClassData(PermGroup group) : group_(std::move(group)) {}

  PermGroup group_;
  std::vector<Permutation> reps_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint32_t> element_class_;
  std::vector<std::vector<std::uint32_t>> power_maps_;
  std::vector<std::size_t> inverse_;
  std::uint64_t exponent_ = 1;
};

using ClassDataPtr = std::shared_ptr<const ClassData>;

inline ClassDataPtr conjugacy_classes(const PermGroup& group, const Limits& limits = {}) {
  return ClassData::compute(group, limits);
}

/// True iff every element is conjugate to its inverse.
bool is_ambivalent(const ClassData& classes);

}  // namespace fsind
