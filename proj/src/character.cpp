#include "fsind/character.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fsind {

Character::Character(ClassDataPtr classes, std::vector<Cyclotomic> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (!classes_ || values_.size() != classes_->num_classes()) {
    throw std::invalid_argument("character needs one value per conjugacy class");
  }
}

long long Character::degree() const {
  auto d = values_[0].as_rational_integer();
  if (!d) throw ConsistencyError("character degree is not an integer: " + values_[0].to_string());
  return *d;
}

Character Character::conj() const {
  std::vector<Cyclotomic> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.conj());
  return Character(classes_, std::move(out));
}

bool Character::is_real() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.conj() == v; });
}

Character trivial_character(const ClassDataPtr& classes) {
  return Character(classes, std::vector<Cyclotomic>(classes->num_classes(), Cyclotomic(1)));
}

Character regular_character(const ClassDataPtr& classes) {
  std::vector<Cyclotomic> values(classes->num_classes());
  values[0] = Cyclotomic(static_cast<long long>(classes->group_order()));
  return Character(classes, std::move(values));
}

CharacterTable::CharacterTable(ClassDataPtr classes, std::vector<Character> rows)
    : classes_(std::move(classes)), rows_(std::move(rows)) {}

std::string CharacterTable::to_string() const {
  std::ostringstream out;
  out << "class";
  for (const auto& rep : classes_->reps()) out << '\t' << rep.to_string();
  out << "\nsize";
  for (auto s : classes_->sizes()) out << '\t' << s;
  out << '\n';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out << "X." << (i + 1);
    for (const auto& v : rows_[i].values()) out << '\t' << v.to_string();
    out << '\n';
  }
  return out.str();
}

Cyclotomic inner_product(const Character& chi, const Character& psi) {
  if (chi.classes() != psi.classes()) throw std::invalid_argument("inner_product: characters of different groups");
  const auto& cd = *chi.classes();
  CyclotomicSum sum;
  for (std::size_t c = 0; c < cd.num_classes(); ++c) {
    sum.add_product(chi[c], psi[c].conj(), mpq_class(static_cast<unsigned long>(cd.sizes()[c])));
  }
  return sum.result().scaled(mpq_class(1, static_cast<unsigned long>(cd.group_order())));
}

Character restrict(const Character& chi, const ClassDataPtr& sub) {
  const auto& big = chi.classes()->group();
  if (!sub->group().is_subgroup_of(big)) throw std::invalid_argument("restrict: not a subgroup");
  std::vector<Cyclotomic> values;
  values.reserve(sub->num_classes());
  for (const auto& rep : sub->reps()) values.push_back(chi.value(rep));
  return Character(sub, std::move(values));
}

Character induce(const Character& chi, const ClassDataPtr& over) {
  const PermGroup& s = chi.classes()->group();
  const PermGroup& hat = over->group();
  if (!s.is_subgroup_of(hat)) throw std::invalid_argument("induce: not a subgroup");
  if (hat.order() != 2 * s.order()) throw std::invalid_argument("induce: index is not 2");
  const Permutation* outside = nullptr;
  for (const auto& gen : hat.generators()) {
    if (!s.contains(gen)) {
      outside = &gen;
      break;
    }
  }
  // An index-2 subgroup is normal: Ind(chi)(y) = chi(y) + chi(g y g^-1) on S.
  std::vector<Cyclotomic> values;
  values.reserve(over->num_classes());
  for (const auto& rep : over->reps()) {
    if (!s.contains(rep)) {
      values.emplace_back();
      continue;
    }
    values.push_back(chi.value(rep) + chi.value(conjugate(*outside, rep)));
  }
  return Character(over, std::move(values));
}

Character conjugate_character(const Character& chi, const Permutation& a, const ClassDataPtr& target) {
  const PermGroup& s = chi.classes()->group();
  const PermGroup& t = target->group();
  if (s.order() != t.order()) throw std::invalid_argument("conjugate_character: groups differ in order");
  for (const auto& x : s.generators()) {
    if (!t.contains(conjugate(a, x))) throw std::invalid_argument("conjugate_character: target is not a S a^-1");
  }
  const Permutation a_inv = a.inverse();
  std::vector<Cyclotomic> values;
  values.reserve(target->num_classes());
  for (const auto& y : target->reps()) values.push_back(chi.value(conjugate(a_inv, y)));
  return Character(target, std::move(values));
}

long long nu_classical(const Character& chi, long long m) {
  if (m < 1) throw std::invalid_argument("nu_classical: m must be positive");
  const auto& cd = *chi.classes();
  CyclotomicSum sum;
  for (std::size_t c = 0; c < cd.num_classes(); ++c) {
    sum.add(chi[cd.power_map(c, m)], mpq_class(static_cast<unsigned long>(cd.sizes()[c])));
  }
  const Cyclotomic value = sum.result().scaled(mpq_class(1, static_cast<unsigned long>(cd.group_order())));
  auto n = value.as_rational_integer();
  if (!n) throw ConsistencyError("classical indicator is not an integer: " + value.to_string());
  return *n;
}

bool is_ambivalent(const PermGroup& group, const Limits& limits) {
  return is_ambivalent(*ClassData::compute(group, limits));
}

std::string check_table(const CharacterTable& table) {
  const auto& cd = *table.classes();
  const std::size_t r = cd.num_classes();
  if (table.size() != r) return "row count differs from class count";
  std::uint64_t squares = 0;
  for (const auto& row : table.rows()) {
    const long long d = row.degree();
    if (d <= 0) return "non-positive degree";
    squares += static_cast<std::uint64_t>(d * d);
  }
  if (squares != cd.group_order()) return "sum of squared degrees differs from the group order";
  std::vector<Character> conj_rows;
  for (const auto& row : table.rows()) conj_rows.push_back(row.conj());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      CyclotomicSum sum;
      for (std::size_t c = 0; c < r; ++c) {
        sum.add_product(table[i][c], conj_rows[j][c], mpq_class(static_cast<unsigned long>(cd.sizes()[c])));
      }
      const Cyclotomic expected(static_cast<long long>(i == j ? cd.group_order() : 0));
      if (sum.result() != expected) {
        return "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not orthogonal";
      }
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      CyclotomicSum sum;
      for (std::size_t i = 0; i < r; ++i) sum.add_product(table[i][a], conj_rows[i][b]);
      const Cyclotomic expected(static_cast<long long>(a == b ? cd.group_order() / cd.sizes()[a] : 0));
      if (sum.result() != expected) {
        return "columns " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " are not orthogonal";
      }
    }
  }
  return {};
}

namespace {

// Order-independent hash of the element set.
std::uint64_t fingerprint(const PermGroup& group, const Limits& limits) {
  std::uint64_t h = group.order() * 0x9E3779B97F4A7C15ull + group.degree();
  PermutationHash hasher;
  for (const auto& x : group.elements(limits)) {
    std::uint64_t v = hasher(x);
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdull;
    v ^= v >> 33;
    h += v;
  }
  return h;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Permutation& g) { return b.contains(g); });
}

}  // namespace

CharacterTablePtr TableCache::get(const PermGroup& group) {
  const std::uint64_t key = fingerprint(group, options_.limits);
  auto lookup = [&]() -> CharacterTablePtr {
    for (const auto& entry : entries_) {
      if (entry.fingerprint == key && same_group(entry.table->group(), group)) return entry.table;
    }
    return nullptr;
  };
  {
    std::lock_guard lock(mutex_);
    if (auto hit = lookup()) return hit;
  }
  // Built outside the lock; a concurrent duplicate is dropped below.
  auto table = std::make_shared<const CharacterTable>(character_table(group, options_));
  std::lock_guard lock(mutex_);
  if (auto hit = lookup()) return hit;
  entries_.push_back({key, table});
  return table;
}

std::vector<CharacterTablePtr> TableCache::tables() const {
  std::lock_guard lock(mutex_);
  std::vector<CharacterTablePtr> out;
  for (const auto& entry : entries_) out.push_back(entry.table);
  return out;
}

std::size_t TableCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace fsind
