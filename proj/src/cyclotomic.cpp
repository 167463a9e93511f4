#include "fsind/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fsind {

namespace {

using Poly = std::vector<mpq_class>;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1 % m, base = b % m;
  while (e) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// Phi_n with integer coefficients, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<std::vector<long long>>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<long long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      long long c = num[i];
      if (c == 0) continue;
      quot[i - dd] = c;
      for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * div[t];
      if (i == dd) break;
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<std::vector<long long>>(std::move(num)));
  return *it->second;
}

// In-place reduction modulo Phi_n; the result has length phi(n).
void reduce(Poly& poly, std::uint64_t n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  mpq_class scratch;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const mpq_class c = poly[i];
    for (std::size_t t = 0; t < deg; ++t) {
      if (phi_poly[t] == 0) continue;
      scratch = c * static_cast<signed long>(phi_poly[t]);
      poly[i - deg + t] -= scratch;
    }
    poly[i] = 0;
  }
  poly.resize(deg);
}

// Power-basis vector at conductor `from` re-expressed at conductor `to`.
Poly embed(const Poly& coeffs, std::uint64_t from, std::uint64_t to) {
  if (from == to) return coeffs;
  const std::uint64_t stride = to / from;
  if (from == 1) {
    Poly out(euler_phi(to));
    out[0] = coeffs[0];
    return out;
  }
  Poly out(stride * (coeffs.size() - 1) + 1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) out[stride * j] = coeffs[j];
  reduce(out, to);
  return out;
}

Poly galois_raw(const Poly& coeffs, std::uint64_t n, long long a) {
  long long am = a % static_cast<long long>(n);
  if (am < 0) am += static_cast<long long>(n);
  Poly out(n);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) == 0) continue;
    out[(j * static_cast<std::uint64_t>(am)) % n] += coeffs[j];
  }
  reduce(out, n);
  return out;
}

Poly multiply_raw(const Poly& a, const Poly& b, std::uint64_t n) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  reduce(out, n);
  return out;
}

// A generator of the kernel of (Z/n)^* -> (Z/(n/p))^*, or 1 if it is trivial.
long long subfield_kernel_generator(std::uint64_t n, std::uint64_t p) {
  const std::uint64_t d = n / p;
  if (d % p == 0) return static_cast<long long>(1 + d);
  if (p == 2) return 1;
  // a = 1 (mod d), a = g (mod p) for a primitive root g mod p.
  const std::uint64_t g = primitive_root(p);
  const std::uint64_t d_inv = mod_pow(d % p, p - 2, p);
  const std::uint64_t t = (g + p - 1) % p * d_inv % p;
  return static_cast<long long>(1 + d * t);
}

// Rows mapping a conductor-n power-basis vector known to lie in Q(zeta_d)
// to its conductor-d coordinates.
struct Conversion {
  std::vector<std::vector<mpq_class>> rows;
};

const Conversion& conversion(std::uint64_t n, std::uint64_t d) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<Conversion>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, d});
    if (it != cache.end()) return *it->second;
  }
  const std::size_t big = euler_phi(n);
  const std::size_t small = euler_phi(d);
  // Augmented system [B | I] with B's columns the images of 1, zeta_d, ...
  std::vector<std::vector<mpq_class>> m(big, std::vector<mpq_class>(small + big));
  for (std::size_t j = 0; j < small; ++j) {
    Poly unit(small);
    unit[j] = 1;
    Poly col = embed(unit, d, n);
    for (std::size_t i = 0; i < big; ++i) m[i][j] = col[i];
  }
  for (std::size_t i = 0; i < big; ++i) m[i][small + i] = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < small; ++col, ++row) {
    std::size_t pivot = row;
    while (pivot < big && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == big) throw std::logic_error("subfield basis is not independent");
    std::swap(m[row], m[pivot]);
    const mpq_class inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < big; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t c = col; c < small + big; ++c) m[r][c] -= f * m[row][c];
    }
  }
  auto conv = std::make_unique<Conversion>();
  conv->rows.resize(small);
  for (std::size_t i = 0; i < small; ++i) {
    conv->rows[i].assign(m[i].begin() + static_cast<long>(small), m[i].end());
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(n, d), std::move(conv));
  return *it->second;
}

Poly convert_down(const Poly& coeffs, std::uint64_t n, std::uint64_t d) {
  const auto& conv = conversion(n, d);
  Poly out(conv.rows.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (sgn(coeffs[k]) == 0 || sgn(conv.rows[i][k]) == 0) continue;
      out[i] += conv.rows[i][k] * coeffs[k];
    }
  }
  return out;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

Cyclotomic::Cyclotomic() : coeffs_(1) {}

Cyclotomic::Cyclotomic(long long value) : coeffs_{mpq_class(static_cast<signed long>(value))} {}

Cyclotomic::Cyclotomic(mpq_class value) : coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(std::uint64_t conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, long long k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  long long e = k % static_cast<long long>(n);
  if (e < 0) e += static_cast<long long>(n);
  Poly poly(n);
  poly[static_cast<std::size_t>(e)] = 1;
  reduce(poly, n);
  return Cyclotomic(n, std::move(poly));
}

Cyclotomic Cyclotomic::from_exponents(std::uint64_t n, std::span<const mpq_class> coeffs) {
  if (n == 0 || coeffs.size() != n) throw std::invalid_argument("from_exponents: need n coefficients");
  Poly poly(coeffs.begin(), coeffs.end());
  reduce(poly, n);
  return Cyclotomic(n, std::move(poly));
}

Cyclotomic Cyclotomic::from_exponents(std::uint64_t n, std::span<const long long> coeffs) {
  std::vector<mpq_class> q;
  q.reserve(coeffs.size());
  for (long long c : coeffs) q.emplace_back(static_cast<signed long>(c));
  return from_exponents(n, std::span<const mpq_class>(q));
}

void Cyclotomic::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  bool changed = true;
  while (changed && conductor_ > 1) {
    changed = false;
    bool rational = true;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) != 0) {
        rational = false;
        break;
      }
    }
    if (rational) {
      coeffs_.resize(1);
      conductor_ = 1;
      break;
    }
    for (auto p : prime_factors(conductor_)) {
      const long long a = subfield_kernel_generator(conductor_, p);
      if (a != 1 && galois_raw(coeffs_, conductor_, a) != coeffs_) continue;
      coeffs_ = convert_down(coeffs_, conductor_, conductor_ / p);
      conductor_ /= p;
      changed = true;
      break;
    }
  }
}

bool Cyclotomic::is_zero() const noexcept { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }

std::optional<mpq_class> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

std::optional<long long> Cyclotomic::as_rational_integer() const {
  if (conductor_ != 1 || coeffs_[0].get_den() != 1) return std::nullopt;
  const mpz_class& num = coeffs_[0].get_num();
  if (!num.fits_slong_p()) return std::nullopt;
  return num.get_si();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const std::uint64_t n = std::lcm(conductor_, rhs.conductor_);
  Poly a = embed(coeffs_, conductor_, n);
  Poly b = embed(rhs.coeffs_, rhs.conductor_, n);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = Cyclotomic(n, std::move(a));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.conductor_ == 1) {
    *this = scaled(rhs.coeffs_[0]);
    return *this;
  }
  if (conductor_ == 1) {
    *this = rhs.scaled(coeffs_[0]);
    return *this;
  }
  const std::uint64_t n = std::lcm(conductor_, rhs.conductor_);
  *this = Cyclotomic(n, multiply_raw(embed(coeffs_, conductor_, n), embed(rhs.coeffs_, rhs.conductor_, n), n));
  return *this;
}

Cyclotomic Cyclotomic::scaled(const mpq_class& factor) const {
  if (sgn(factor) == 0) return Cyclotomic();
  mpq_class f = factor;
  f.canonicalize();
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= f;
  return out;
}

Cyclotomic Cyclotomic::galois(long long a) const {
  if (conductor_ == 1) return *this;
  if (std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), conductor_) != 1) {
    throw std::invalid_argument("galois: exponent not coprime to the conductor");
  }
  Cyclotomic out;
  out.conductor_ = conductor_;
  out.coeffs_ = galois_raw(coeffs_, conductor_, a);
  return out;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::ostringstream out;
  out << "z=E(" << conductor_ << "): ";
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Cyclotomic root_of_unity(std::uint64_t n, long long k) { return Cyclotomic::root_of_unity(n, k); }

void CyclotomicSum::grow_to(std::uint64_t conductor) {
  const std::uint64_t n = std::lcm(conductor_, conductor);
  if (n == conductor_) return;
  coeffs_ = embed(coeffs_, conductor_, n);
  conductor_ = n;
}

void CyclotomicSum::add(const Cyclotomic& a, const mpq_class& w) {
  if (sgn(w) == 0) return;
  mpq_class weight = w;
  weight.canonicalize();
  grow_to(a.conductor_);
  if (a.conductor_ == 1) {
    coeffs_[0] += weight * a.coeffs_[0];
    return;
  }
  const Poly b = embed(a.coeffs_, a.conductor_, conductor_);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sgn(b[i]) != 0) coeffs_[i] += weight * b[i];
  }
}

void CyclotomicSum::add_product(const Cyclotomic& a, const Cyclotomic& b, const mpq_class& w) {
  mpq_class weight = w;
  weight.canonicalize();
  if (a.conductor_ == 1) {
    add(b, weight * a.coeffs_[0]);
    return;
  }
  if (b.conductor_ == 1) {
    add(a, weight * b.coeffs_[0]);
    return;
  }
  const std::uint64_t n = std::lcm(a.conductor_, b.conductor_);
  grow_to(n);
  const Poly prod = embed(multiply_raw(embed(a.coeffs_, a.conductor_, n), embed(b.coeffs_, b.conductor_, n), n),
                          n, conductor_);
  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (sgn(prod[i]) != 0) coeffs_[i] += weight * prod[i];
  }
}

Cyclotomic CyclotomicSum::result() const { return Cyclotomic(conductor_, coeffs_); }

}  // namespace fsind
