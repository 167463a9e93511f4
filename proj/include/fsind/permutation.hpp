#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsind {

using Point = std::uint16_t;

/// Text could not be parsed; `position` is the 0-based offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/**
 * A permutation of {1,...,n}.
 *
 * Storage is 0-based; every textual interface is 1-based. Composition is
 * right-to-left: (a * b)(x) = a(b(x)).
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// 0-based image array; must be a bijection of {0,...,n-1}.
  static Permutation from_images(std::vector<Point> images);

  /// Product of the given (1-based) cycles; points not mentioned are fixed.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                                 std::size_t degree);

  /// Parses "(1,2)(3,4)" or "(1 2 3)", with an optional " deg=n" suffix.
  /// Without a suffix the degree is `degree` if given, else the largest point.
  static Permutation parse(std::string_view text,
                           std::optional<std::size_t> degree = std::nullopt);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }

  /// 0-based image.
  Point operator[](std::size_t x) const noexcept { return images_[x]; }
  /// 1-based image.
  int image(int x) const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  bool is_identity() const noexcept;
  int sign() const noexcept;
  std::uint64_t order() const noexcept;
  std::optional<Point> smallest_moved_point() const noexcept;

  /// Nontrivial cycles in 1-based notation, each starting at its least point,
  /// ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  /// Canonical cycle notation "(1,2)(3,4)"; the identity prints as "()".
  std::string to_string() const;

  /// Same permutation on a larger point set; the new points are fixed.
  Permutation extended(std::size_t degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// x -> a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
/// g x g^-1.
Permutation conjugate(const Permutation& g, const Permutation& x);
int sign(const Permutation& p);
std::uint64_t element_order(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fsind

template <>
struct std::hash<fsind::Permutation> {
  std::size_t operator()(const fsind::Permutation& p) const noexcept {
    return fsind::PermutationHash{}(p);
  }
};
