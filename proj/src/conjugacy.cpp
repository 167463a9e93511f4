#include "fsind/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace fsind {

std::shared_ptr<const ClassData> ClassData::compute(const PermGroup& group, const Limits& limits) {
  const auto& elements = group.elements(limits);
  const std::size_t n_elem = elements.size();
  constexpr std::uint32_t kUnassigned = 0xFFFFFFFFu;

  std::vector<Permutation> gen_inverses;
  for (const auto& s : group.generators()) gen_inverses.push_back(s.inverse());

  // Raw classes in order of their least element.
  std::vector<std::uint32_t> raw_class(n_elem, kUnassigned);
  std::vector<std::size_t> raw_rep;
  std::vector<std::uint64_t> raw_size;
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n_elem; ++i) {
    if (raw_class[i] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(raw_rep.size());
    raw_rep.push_back(i);
    raw_class[i] = id;
    queue.assign(1, i);
    std::uint64_t size = 0;
    while (!queue.empty()) {
      std::size_t cur = queue.back();
      queue.pop_back();
      ++size;
      for (std::size_t s = 0; s < gen_inverses.size(); ++s) {
        Permutation y = group.generators()[s] * elements[cur] * gen_inverses[s];
        std::size_t j = *group.index_of(y);
        if (raw_class[j] == kUnassigned) {
          raw_class[j] = id;
          queue.push_back(j);
        }
      }
    }
    raw_size.push_back(size);
  }

  const std::size_t r = raw_rep.size();
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t c) {
    const Permutation& rep = elements[raw_rep[c]];
    const auto moved = rep.smallest_moved_point();
    return std::make_tuple(rep.is_identity() ? 0 : 1, raw_size[c],
                           moved ? static_cast<int>(*moved) : -1, std::cref(rep));
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::uint32_t> relabel(r);
  for (std::size_t pos = 0; pos < r; ++pos) relabel[order[pos]] = static_cast<std::uint32_t>(pos);

  std::shared_ptr<ClassData> data(new ClassData(group));
  data->reps_.resize(r);
  data->sizes_.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    data->reps_[relabel[c]] = elements[raw_rep[c]];
    data->sizes_[relabel[c]] = raw_size[c];
  }
  data->element_class_.resize(n_elem);
  for (std::size_t i = 0; i < n_elem; ++i) data->element_class_[i] = relabel[raw_class[i]];

  data->power_maps_.resize(r);
  data->inverse_.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    const Permutation& rep = data->reps_[c];
    const std::uint64_t ord = rep.order();
    auto& pm = data->power_maps_[c];
    pm.resize(ord);
    Permutation power(group.degree());
    for (std::uint64_t k = 0; k < ord; ++k) {
      pm[k] = data->element_class_[*group.index_of(power)];
      power = power * rep;
    }
    data->inverse_[c] = pm[(ord - 1) % ord];
    data->exponent_ = std::lcm(data->exponent_, ord);
  }
  return data;
}

std::optional<std::size_t> ClassData::find_class(const Permutation& p) const {
  if (p.degree() != group_.degree()) return std::nullopt;
  auto idx = group_.index_of(p);
  if (!idx) return std::nullopt;
  return element_class_[*idx];
}

std::size_t ClassData::class_of(const Permutation& p) const {
  auto c = find_class(p);
  if (!c) throw std::invalid_argument("element " + p.to_string() + " is not in the group");
  return *c;
}

std::size_t ClassData::power_map(std::size_t c, long long k) const {
  const auto& pm = power_maps_.at(c);
  const long long ord = static_cast<long long>(pm.size());
  long long e = k % ord;
  if (e < 0) e += ord;
  return pm[static_cast<std::size_t>(e)];
}

bool is_ambivalent(const ClassData& classes) {
  for (std::size_t c = 0; c < classes.num_classes(); ++c) {
    if (classes.inverse_class(c) != c) return false;
  }
  return true;
}

}  // namespace fsind
