#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsind/perm_group.hpp"

namespace fsind {

/**
 * Textual description of a permutation group:
 *
 *   sym:n | alt:n | cyclic:n | sym-embed:l,n | alt-embed:l,n | sym-prime:k,n
 *   | tilde-sym:n[,N] | gens:<cycles;...>@n
 *
 * e.g. `tilde-sym:5,7` is the copy of S_3 in A_5, acting on 7 letters, and
 * `gens:(1,2)(3,4);(1,3)@4` the Klein four group. Parsing then printing gives
 * the canonical text.
 */
struct GroupSpec {
  std::string family;
  std::vector<std::size_t> params;
  /// Generators for the `gens` family.
  std::vector<Permutation> generators;

  std::size_t degree() const;
  PermGroup build() const;
  std::string to_string() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws ParseError (with position) on malformed text and
/// std::invalid_argument on out-of-range parameters.
GroupSpec parse_group_spec(std::string_view text);

inline PermGroup group_from_spec(std::string_view text) { return parse_group_spec(text).build(); }

}  // namespace fsind
