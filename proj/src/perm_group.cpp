#include "fsind/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace fsind {

Bsgs::Bsgs(std::size_t degree, const std::vector<Permutation>& generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    add_generator(g);
  }
}

std::uint64_t Bsgs::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(level.orbit.size()), &result)) {
      throw std::overflow_error("group order does not fit in 64 bits");
    }
  }
  return result;
}

bool Bsgs::member_from(std::size_t level, Permutation g) const {
  for (std::size_t i = level; i < levels_.size(); ++i) {
    const auto& u = levels_[i].transversal[g[levels_[i].base]];
    if (!u) return false;
    g = u->inverse() * g;
  }
  return g.is_identity();
}

bool Bsgs::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return member_from(0, p);
}

bool Bsgs::add_generator(const Permutation& g) {
  if (g.is_identity() || contains(g)) return false;
  add_at(0, g);
  return true;
}

// g lies in the pointwise stabilizer of the first `level` base points.
void Bsgs::add_at(std::size_t level, const Permutation& g) {
  if (g.is_identity()) return;
  if (level == levels_.size()) {
    BsgsLevel fresh;
    fresh.base = *g.smallest_moved_point();
    fresh.transversal.resize(degree_);
    fresh.transversal[fresh.base] = Permutation(degree_);
    fresh.orbit.push_back(fresh.base);
    levels_.push_back(std::move(fresh));
  }
  if (member_from(level, g)) return;
  levels_[level].generators.push_back(g);
  const std::vector<Point> orbit = levels_[level].orbit;
  for (Point p : orbit) {
    extend_orbit(level, g * *levels_[level].transversal[p]);
  }
}

void Bsgs::extend_orbit(std::size_t level, const Permutation& h) {
  const Point p = h[levels_[level].base];
  if (!levels_[level].transversal[p]) {
    levels_[level].transversal[p] = h;
    levels_[level].orbit.push_back(p);
    const std::vector<Permutation> gens = levels_[level].generators;
    for (const auto& s : gens) extend_orbit(level, s * h);
  } else {
    Permutation residue = levels_[level].transversal[p]->inverse() * h;
    if (!residue.is_identity()) add_at(level + 1, residue);
  }
}

struct PermGroup::ElementCache {
  std::once_flag once;
  std::atomic<bool> ready{false};
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<ElementCache>()) {
  if (degree_ == 0) throw std::invalid_argument("group degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree differs from group degree");
  }
  std::erase_if(generators_, [](const Permutation& g) { return g.is_identity(); });
  bsgs_ = std::make_shared<const Bsgs>(degree_, generators_);
  order_ = bsgs_->order();
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Bsgs chain(degree, {});
  std::vector<Permutation> gens;
  for (const auto& x : elements) {
    if (chain.add_generator(x)) gens.push_back(x);
  }
  PermGroup group(degree, std::move(gens));
  if (group.order() != elements.size()) {
    throw std::invalid_argument("element list is not closed under multiplication");
  }
  auto& cache = *group.cache_;
  std::call_once(cache.once, [&] {
    cache.elements = std::move(elements);
    cache.index.reserve(cache.elements.size());
    for (std::uint32_t i = 0; i < cache.elements.size(); ++i) cache.index.emplace(cache.elements[i], i);
    cache.ready.store(true, std::memory_order_release);
  });
  return group;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  if (cache_->ready.load(std::memory_order_acquire)) return cache_->index.count(p) > 0;
  return bsgs_->contains(p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

const std::vector<Permutation>& PermGroup::elements(const Limits& limits) const {
  check_enumeration(order_, limits);
  auto& cache = *cache_;
  std::call_once(cache.once, [&] {
    std::vector<Permutation> out;
    out.reserve(order_);
    const auto& levels = bsgs_->levels();
    // Every element is uniquely u_0 * u_1 * ... * u_{k-1} with u_i from level i.
    std::vector<std::size_t> digit(levels.size(), 0);
    while (true) {
      Permutation g(degree_);
      for (std::size_t i = 0; i < levels.size(); ++i) {
        g = g * *levels[i].transversal[levels[i].orbit[digit[i]]];
      }
      out.push_back(std::move(g));
      std::size_t i = 0;
      for (; i < levels.size(); ++i) {
        if (++digit[i] < levels[i].orbit.size()) break;
        digit[i] = 0;
      }
      if (i == levels.size()) break;
    }
    std::sort(out.begin(), out.end());
    cache.elements = std::move(out);
    cache.index.reserve(cache.elements.size());
    for (std::uint32_t i = 0; i < cache.elements.size(); ++i) cache.index.emplace(cache.elements[i], i);
    cache.ready.store(true, std::memory_order_release);
  });
  return cache.elements;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  if (!cache_->ready.load(std::memory_order_acquire)) {
    throw std::logic_error("index_of requires elements() to be built first");
  }
  auto it = cache_->index.find(p);
  if (it == cache_->index.end()) return std::nullopt;
  return it->second;
}

std::uint64_t group_order(const PermGroup& g) { return g.order(); }

bool member(const PermGroup& g, const Permutation& p) { return g.contains(p); }

}  // namespace fsind
