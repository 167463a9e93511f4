#include "fsind/cosets.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fsind/named_groups.hpp"

namespace fsind {

Permutation coset_rep(const Permutation& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("coset_rep: degree mismatch");
  if (h.contains(g)) return h.identity();
  Permutation c = g;
  for (const auto& level : h.bsgs().levels()) {
    Point best = level.orbit.front();
    for (Point delta : level.orbit) {
      if (c[delta] < c[best]) best = delta;
    }
    c = c * *level.transversal[best];
  }
  return c;
}

std::vector<Permutation> right_transversal(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("right_transversal: H is not a subgroup of G");
  const std::uint64_t index = g.order() / h.order();
  check_index(index, limits);
  std::vector<Permutation> reps{h.identity()};
  reps.reserve(index);
  std::unordered_set<Permutation> seen{reps.front()};
  for (std::size_t i = 0; i < reps.size() && reps.size() < index; ++i) {
    for (const auto& s : g.generators()) {
      Permutation next = coset_rep(s * reps[i], h);
      if (seen.insert(next).second) reps.push_back(std::move(next));
    }
  }
  if (reps.size() != index) throw ConsistencyError("right_transversal: coset count differs from the index");
  return reps;
}

DoubleCosetDecomposition double_cosets(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  DoubleCosetDecomposition out;
  out.transversal = right_transversal(g, h, limits);
  const auto& reps = out.transversal;
  std::unordered_map<Permutation, std::uint32_t> index;
  index.reserve(reps.size());
  for (std::uint32_t i = 0; i < reps.size(); ++i) index.emplace(reps[i], i);

  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  std::vector<std::uint32_t> orbit_of(reps.size(), kNone);
  for (std::uint32_t start = 0; start < reps.size(); ++start) {
    if (orbit_of[start] != kNone) continue;
    DoubleCoset dc;
    dc.transversal_indices.push_back(start);
    orbit_of[start] = start;
    for (std::size_t k = 0; k < dc.transversal_indices.size(); ++k) {
      const Permutation& c = reps[dc.transversal_indices[k]];
      for (const auto& s : h.generators()) {
        const std::uint32_t j = index.at(coset_rep(s * c, h));
        if (orbit_of[j] == kNone) {
          orbit_of[j] = start;
          dc.transversal_indices.push_back(j);
        }
      }
    }
    std::sort(dc.transversal_indices.begin(), dc.transversal_indices.end());
    std::uint32_t best = dc.transversal_indices.front();
    for (auto j : dc.transversal_indices) {
      if (reps[j] < reps[best]) best = j;
    }
    dc.rep = reps[best];
    dc.size = h.order() * dc.transversal_indices.size();
    out.cosets.push_back(std::move(dc));
  }
  std::sort(out.cosets.begin(), out.cosets.end(),
            [](const DoubleCoset& a, const DoubleCoset& b) { return a.rep < b.rep; });
  return out;
}

Stabilizer stabilizer(const Permutation& g, const PermGroup& h, const Limits& limits) {
  if (g.degree() != h.degree()) throw std::invalid_argument("stabilizer: degree mismatch");
  const Permutation g_inv = g.inverse();
  std::vector<Permutation> kept;
  for (const auto& x : h.elements(limits)) {
    if (h.contains(g_inv * x * g)) kept.push_back(x);
  }
  return {g, PermGroup::from_elements(h.degree(), std::move(kept))};
}

namespace {

void check_letters(const Permutation& sigma, std::size_t l) {
  if (l < 1 || l > sigma.degree()) throw std::invalid_argument("normal form: l must lie in 1..degree");
}

bool is_involution(const Permutation& p) { return !p.is_identity() && (p * p).is_identity(); }

}  // namespace

NormalForm normal_form_Sl_tracked(const Permutation& sigma, std::size_t l) {
  check_letters(sigma, l);
  const std::size_t n = sigma.degree();
  Permutation form = sigma;
  Permutation multiplier(n);
  for (;;) {
    // Least small letter whose cycle holds another small letter.
    bool found = false;
    Point i = 0, j = 0;
    std::vector<bool> visited(n, false);
    for (Point start = 0; start < l && !found; ++start) {
      if (visited[start]) continue;
      std::vector<Point> small;
      Point x = start;
      do {
        visited[x] = true;
        if (x < l) small.push_back(x);
        x = form[x];
      } while (x != start);
      if (small.size() >= 2) {
        std::sort(small.begin(), small.end());
        i = small[0];
        j = small[1];
        found = true;
      }
    }
    if (!found) break;
    std::vector<Point> images(n);
    for (Point k = 0; k < n; ++k) images[k] = k;
    std::swap(images[i], images[j]);
    const auto swap = Permutation::from_images(images);
    form = form * swap;
    multiplier = multiplier * swap;
  }
  return {form, multiplier};
}

Permutation normal_form_Sl(const Permutation& sigma, std::size_t l) { return normal_form_Sl_tracked(sigma, l).form; }

Permutation relabeled_normal_form_Sl(const Permutation& sigma, std::size_t l) {
  const Permutation form = normal_form_Sl(sigma, l);
  const std::size_t n = form.degree();
  // (least large letter, small letter) for every cycle mixing both kinds.
  std::vector<std::pair<Point, Point>> order;
  std::vector<bool> visited(n, false);
  for (Point start = 0; start < n; ++start) {
    if (visited[start]) continue;
    Point least_large = static_cast<Point>(n);
    Point small = static_cast<Point>(n);
    Point x = start;
    do {
      visited[x] = true;
      if (x < l) {
        small = x;
      } else {
        least_large = std::min(least_large, x);
      }
      x = form[x];
    } while (x != start);
    if (small < n && least_large < n) order.emplace_back(least_large, small);
  }
  std::sort(order.begin(), order.end());
  std::vector<Point> rename(n);
  for (Point k = 0; k < n; ++k) rename[k] = k;
  std::vector<bool> used(l, false);
  Point next = 0;
  for (const auto& [large, small] : order) {
    rename[small] = next;
    used[small] = true;
    ++next;
  }
  for (Point k = 0; k < l; ++k) {
    if (!used[k]) rename[k] = next++;
  }
  const auto pi = Permutation::from_images(rename);
  return conjugate(pi, form);
}

bool is_null_coset_Sl(const Permutation& sigma, std::size_t l) {
  const Permutation form = normal_form_Sl(sigma, l);
  return !form.is_identity() && !is_involution(form);
}

Census census_Sl(std::size_t l, std::size_t n, const Limits& limits) {
  if (l < 1 || l > n) throw std::invalid_argument("census: need 1 <= l <= n");
  const auto dc = double_cosets(sym(n), sym_embed(l, n), limits);
  Census c;
  c.total = dc.cosets.size();
  for (const auto& coset : dc.cosets) c.null += is_null_coset_Sl(coset.rep, l) ? 1 : 0;
  return c;
}

Census census_normal_form(std::size_t l, std::size_t n, const Limits& limits) {
  if (l < 1 || l > n) throw std::invalid_argument("census: need 1 <= l <= n");
  const auto group = sym(n);
  std::unordered_set<Permutation> forms;
  for (const auto& sigma : group.elements(limits)) forms.insert(relabeled_normal_form_Sl(sigma, l));
  Census c;
  c.total = forms.size();
  for (const auto& f : forms) c.null += (!f.is_identity() && !is_involution(f)) ? 1 : 0;
  return c;
}

}  // namespace fsind
