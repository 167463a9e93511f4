#include "fsind/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fsind {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
  }
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > 0xFFFF) {
    throw std::invalid_argument("degree too large");
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[p] = true;
  }
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles,
                                     std::size_t degree) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (int x : cycle) {
      if (x < 1 || static_cast<std::size_t>(x) > degree) {
        throw std::invalid_argument("point " + std::to_string(x) + " out of range 1.." +
                                    std::to_string(degree));
      }
      if (used[x - 1]) {
        throw std::invalid_argument("point " + std::to_string(x) + " repeated in cycles");
      }
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      result.images_[from - 1] = static_cast<Point>(to - 1);
    }
  }
  return result;
}

Permutation Permutation::parse(std::string_view text, std::optional<std::size_t> degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 0xFFFF) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number", start);
    return static_cast<int>(value);
  };

  skip_ws();
  while (pos < text.size() && text[pos] == '(') {
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      cycle.push_back(read_int());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
    ++pos;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  std::optional<std::size_t> suffix_degree;
  if (pos < text.size()) {
    if (text.substr(pos, 4) != "deg=") throw ParseError("unexpected character", pos);
    pos += 4;
    suffix_degree = static_cast<std::size_t>(read_int());
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters", pos);
  }

  int max_point = 0;
  for (const auto& c : cycles) {
    for (int x : c) max_point = std::max(max_point, x);
  }
  std::size_t n = suffix_degree.value_or(degree.value_or(static_cast<std::size_t>(max_point)));
  if (suffix_degree && degree && *suffix_degree != *degree) {
    throw ParseError("deg= suffix disagrees with expected degree", 0);
  }
  if (static_cast<std::size_t>(max_point) > n) {
    throw ParseError("point " + std::to_string(max_point) + " exceeds degree " + std::to_string(n),
                     0);
  }
  try {
    return from_cycles(cycles, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

int Permutation::image(int x) const {
  if (x < 1 || static_cast<std::size_t>(x) > degree()) {
    throw std::out_of_range("point out of range");
  }
  return images_[x - 1] + 1;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  require_same_degree(*this, rhs);
  Permutation result;
  result.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) {
    result.images_[x] = images_[rhs.images_[x]];
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) {
    result.images_[images_[x]] = static_cast<Point>(x);
  }
  return result;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  const std::uint64_t ord = order();
  e %= ord;
  Permutation result(degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

int Permutation::sign() const noexcept {
  std::vector<bool> seen(degree(), false);
  std::size_t transpositions = 0;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::uint64_t Permutation::order() const noexcept {
  std::vector<bool> seen(degree(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = lcm_u64(result, len);
  }
  return result;
}

std::optional<Point> Permutation::smallest_moved_point() const noexcept {
  for (std::size_t x = 0; x < degree(); ++x) {
    if (images_[x] != x) return static_cast<Point>(x);
  }
  return std::nullopt;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<int> cycle;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cycle.push_back(static_cast<int>(y) + 1);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ',';
      out << c[i];
    }
    out << ')';
  }
  return out.str();
}

Permutation Permutation::extended(std::size_t new_degree) const {
  if (new_degree < degree()) throw std::invalid_argument("cannot shrink a permutation");
  Permutation result(new_degree);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

Permutation conjugate(const Permutation& g, const Permutation& x) {
  require_same_degree(g, x);
  // g x g^-1 maps g(i) to g(x(i)).
  return g * x * g.inverse();
}

int sign(const Permutation& p) { return p.sign(); }

std::uint64_t element_order(const Permutation& p) { return p.order(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace fsind
