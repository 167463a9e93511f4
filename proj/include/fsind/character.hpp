#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fsind/conjugacy.hpp"
#include "fsind/cyclotomic.hpp"

namespace fsind {

/// A class function on a permutation group, stored one value per class.
class Character {
 public:
  Character(ClassDataPtr classes, std::vector<Cyclotomic> values);

  const ClassDataPtr& classes() const noexcept { return classes_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  /// Value at a group element.
  const Cyclotomic& value(const Permutation& x) const { return values_[classes_->class_of(x)]; }

  /// chi(e) as an integer; throws ConsistencyError if it is not one.
  long long degree() const;
  Character conj() const;
  bool is_real() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.classes_ == b.classes_ && a.values_ == b.values_;
  }

 private:
  ClassDataPtr classes_;
  std::vector<Cyclotomic> values_;
};

Character trivial_character(const ClassDataPtr& classes);
/// |G| at the identity, zero elsewhere.
Character regular_character(const ClassDataPtr& classes);

/// All irreducible characters of one group.
class CharacterTable {
 public:
  CharacterTable(ClassDataPtr classes, std::vector<Character> rows);

  const ClassDataPtr& classes() const noexcept { return classes_; }
  const PermGroup& group() const noexcept { return classes_->group(); }
  const std::vector<Character>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const Character& operator[](std::size_t i) const { return rows_[i]; }

  /// Tab-separated dump: a class line, a size line, then one line per character.
  std::string to_string() const;

 private:
  ClassDataPtr classes_;
  std::vector<Character> rows_;
};

using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

struct TableOptions {
  Limits limits;
  std::uint64_t seed = 1;
  /// Random splitting attempts before giving up.
  int max_attempts = 64;
};

/**
 * Irreducible characters by Dixon's method.
 *
 * Works modulo the least prime p = 1 (mod exponent) above 2 sqrt|G|: class
 * matrices are split into common eigenvectors by random combinations, then
 * each value is lifted to an exact cyclotomic from the eigenvalue
 * multiplicities of its class representative. Rows are ordered trivial
 * character first, then by (degree, values).
 */
CharacterTable character_table(const PermGroup& group, const TableOptions& options = {});
CharacterTable character_table(const ClassDataPtr& classes, const TableOptions& options = {});

/// (1/|G|) sum_g chi(g) conj(psi(g)).
Cyclotomic inner_product(const Character& chi, const Character& psi);
/// Restriction to the group of `sub`, which must be a subgroup.
Character restrict(const Character& chi, const ClassDataPtr& sub);
/// Induction from an index-2 subgroup to the group of `over`.
Character induce(const Character& chi, const ClassDataPtr& over);
/// The character y -> chi(a^-1 y a) of a S a^-1, where S is chi's group and
/// `target` holds the classes of a S a^-1.
Character conjugate_character(const Character& chi, const Permutation& a, const ClassDataPtr& target);

/// (1/|G|) sum_g chi(g^m); throws ConsistencyError if not an integer.
long long nu_classical(const Character& chi, long long m);
bool is_ambivalent(const PermGroup& group, const Limits& limits = {});

/// Checks row and column orthogonality and sum of squared degrees. Returns an
/// empty string when the table is consistent, otherwise the first problem.
std::string check_table(const CharacterTable& table);

/**
 * Thread-safe cache of character tables keyed by the subgroup itself, so
 * equal subgroups given by different generators share one table.
 */
class TableCache {
 public:
  explicit TableCache(TableOptions options = {}) : options_(std::move(options)) {}

  CharacterTablePtr get(const PermGroup& group);
  std::vector<CharacterTablePtr> tables() const;
  std::size_t size() const;

 private:
  struct Entry {
    std::uint64_t fingerprint;
    CharacterTablePtr table;
  };

  TableOptions options_;
  mutable std::mutex mutex_;
  std::vector<Entry> entries_;
};

}  // namespace fsind
