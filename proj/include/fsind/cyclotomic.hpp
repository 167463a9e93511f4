#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fsind {

/**
 * Exact element of a cyclotomic field Q(zeta_n).
 *
 * Values are stored in the power basis 1, z, ..., z^(phi(n)-1) of
 * Q[z]/Phi_n(z), always at the smallest conductor n whose field contains the
 * value. That makes the representation canonical: two values are equal iff
 * their conductors and coefficient vectors are equal.
 */
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(mpq_class value);

  /// zeta_n^k, zeta_n = exp(2 pi i / n).
  static Cyclotomic root_of_unity(std::uint64_t n, long long k);
  /// sum_k coeffs[k] * zeta_n^k; `coeffs` has length n.
  static Cyclotomic from_exponents(std::uint64_t n, std::span<const mpq_class> coeffs);
  static Cyclotomic from_exponents(std::uint64_t n, std::span<const long long> coeffs);

  std::uint64_t conductor() const noexcept { return conductor_; }
  /// Power-basis coefficients, length phi(conductor()).
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept { return conductor_ == 1; }
  std::optional<mpq_class> as_rational() const;
  /// The value if it is a rational integer fitting in 64 bits.
  std::optional<long long> as_rational_integer() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic scaled(const mpq_class& factor) const;

  /// Complex conjugate (z -> z^-1).
  Cyclotomic conj() const { return galois(-1); }
  /// Image under z -> z^a for a coprime to the conductor.
  Cyclotomic galois(long long a) const;

  /// Canonical text: integers and fractions print bare, otherwise
  /// "z=E(n): c0 + c1*z + c2*z^2 ...".
  std::string to_string() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  friend class CyclotomicSum;
  Cyclotomic(std::uint64_t conductor, std::vector<mpq_class> coeffs);
  void normalize();

  std::uint64_t conductor_ = 1;
  std::vector<mpq_class> coeffs_;
};

inline Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
inline Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
inline Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

Cyclotomic root_of_unity(std::uint64_t n, long long k);
inline Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic neg(const Cyclotomic& a) { return -a; }
inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }
inline std::optional<long long> as_rational_integer(const Cyclotomic& a) {
  return a.as_rational_integer();
}

/**
 * Accumulates sum_i w_i * a_i (or w_i * a_i * b_i) at a common conductor and
 * normalizes once in result(). Use for long sums where per-term normalization
 * would dominate.
 */
class CyclotomicSum {
 public:
  void add(const Cyclotomic& a, const mpq_class& weight = 1);
  void add_product(const Cyclotomic& a, const Cyclotomic& b, const mpq_class& weight = 1);
  Cyclotomic result() const;

 private:
  void grow_to(std::uint64_t conductor);

  std::uint64_t conductor_ = 1;
  std::vector<mpq_class> coeffs_ = std::vector<mpq_class>(1);
};

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace fsind
