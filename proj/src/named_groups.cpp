#include "fsind/named_groups.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsind {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<int> range(int first, int last) {
  std::vector<int> out(static_cast<std::size_t>(last - first + 1));
  std::iota(out.begin(), out.end(), first);
  return out;
}

// Generators of Sym({first..last}) in S_degree.
std::vector<Permutation> sym_generators(int first, int last, std::size_t degree) {
  std::vector<Permutation> gens;
  if (last - first < 1) return gens;
  gens.push_back(Permutation::from_cycles({{first, first + 1}}, degree));
  if (last - first >= 2) gens.push_back(Permutation::from_cycles({range(first, last)}, degree));
  return gens;
}

std::vector<Permutation> alt_generators(int first, int last, std::size_t degree) {
  std::vector<Permutation> gens;
  for (int k = first + 2; k <= last; ++k) {
    gens.push_back(Permutation::from_cycles({{first, first + 1, k}}, degree));
  }
  return gens;
}

}  // namespace

PermGroup sym(std::size_t n) { return sym_embed(n, n); }

PermGroup alt(std::size_t n) { return alt_embed(n, n); }

PermGroup cyclic(std::size_t n) {
  require(n >= 1, "cyclic: n must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles({range(1, static_cast<int>(n))}, n));
  return PermGroup(n, std::move(gens));
}

PermGroup sym_embed(std::size_t l, std::size_t n) {
  require(l >= 1 && l <= n, "sym_embed: need 1 <= l <= n");
  return PermGroup(n, sym_generators(1, static_cast<int>(l), n));
}

PermGroup alt_embed(std::size_t l, std::size_t n) {
  require(l >= 1 && l <= n, "alt_embed: need 1 <= l <= n");
  return PermGroup(n, alt_generators(1, static_cast<int>(l), n));
}

PermGroup sym_prime(std::size_t k, std::size_t n) {
  require(k <= n && n >= 1, "sym_prime: need 0 <= k <= n");
  return PermGroup(n, sym_generators(static_cast<int>(k) + 1, static_cast<int>(n), n));
}

PermGroup tilde_sym(std::size_t n, std::size_t degree) {
  require(n >= 4, "tilde_sym: need n >= 4");
  if (degree == 0) degree = n;
  require(degree >= n, "tilde_sym: degree must be at least n");
  const Permutation swap12 = Permutation::from_cycles({{1, 2}}, degree);
  std::vector<Permutation> gens;
  for (const auto& s : sym_generators(3, static_cast<int>(n), degree)) {
    gens.push_back(s.sign() == 1 ? s : swap12 * s);
  }
  return PermGroup(degree, std::move(gens));
}

}  // namespace fsind
