#pragma once

#include <cstddef>

#include "fsind/perm_group.hpp"

namespace fsind {

// Constructors for the permutation groups the indicator computations are run
// on. All groups act on {1,...,degree}; an embedded group on fewer letters
// fixes the trailing ones.

PermGroup sym(std::size_t n);
PermGroup alt(std::size_t n);
/// Generated by the n-cycle (1 2 ... n).
PermGroup cyclic(std::size_t n);
/// Sym({1..l}) inside S_n.
PermGroup sym_embed(std::size_t l, std::size_t n);
/// Alt({1..l}) inside S_n.
PermGroup alt_embed(std::size_t l, std::size_t n);
/// Permutations of S_n fixing each of 1..k.
PermGroup sym_prime(std::size_t k, std::size_t n);
/// The copy of S_{n-2} inside A_n made of the even permutations that fix or
/// swap the letters 1 and 2 (sigma on {3..n}, times (1 2) when sigma is odd).
/// With `degree` > n the group is embedded in S_degree fixing n+1..degree.
PermGroup tilde_sym(std::size_t n, std::size_t degree = 0);

}  // namespace fsind
