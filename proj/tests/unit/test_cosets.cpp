#include <doctest.h>

#include <random>
#include <set>

#include "fsind/cosets.hpp"
#include "fsind/named_groups.hpp"

using namespace fsind;

namespace {

Permutation cyc(const std::vector<std::vector<int>>& cycles, std::size_t n) {
  return Permutation::from_cycles(cycles, n);
}

// H g H computed directly from the elements of H.
std::set<Permutation> double_coset_of(const Permutation& g, const PermGroup& h) {
  std::set<Permutation> out;
  for (const auto& a : h.elements()) {
    for (const auto& b : h.elements()) out.insert(a * g * b);
  }
  return out;
}

}  // namespace

TEST_CASE("transversal sizes") {
  CHECK(right_transversal(sym(6), sym_embed(3, 6)).size() == 120);
  CHECK(right_transversal(sym(8), sym_embed(4, 8)).size() == 1680);
  auto g = alt(5);
  auto t = right_transversal(g, g);
  REQUIRE(t.size() == 1);
  CHECK(t[0].is_identity());
  CHECK(right_transversal(sym(6), sym_embed(3, 6)).front().is_identity());
  CHECK_THROWS_AS(right_transversal(alt(5), sym(5)), std::invalid_argument);
  Limits tight;
  tight.index_bound = 100;
  CHECK_THROWS_AS(right_transversal(sym(6), sym_embed(3, 6), tight), BoundExceeded);
}

TEST_CASE("transversal meets every coset once") {
  auto g = sym(5);
  auto h = PermGroup(5, {cyc({{1, 2, 3}}, 5), cyc({{4, 5}}, 5)});
  auto t = right_transversal(g, h);
  CHECK(t.size() == 20);
  std::set<Permutation> covered;
  for (const auto& c : t) {
    for (const auto& x : h.elements()) covered.insert(c * x);
  }
  CHECK(covered.size() == 120);
}

TEST_CASE("coset representatives are canonical") {
  std::mt19937_64 rng(4);
  auto g = sym(7);
  auto h = sym_embed(3, 7);
  const auto& hs = h.elements();
  const auto& gs = g.elements();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& x = gs[rng() % gs.size()];
    const auto& y = hs[rng() % hs.size()];
    CHECK(coset_rep(x, h) == coset_rep(x * y, h));
    CHECK(h.contains(x.inverse() * coset_rep(x, h)));
  }
}

TEST_CASE("double coset counts") {
  CHECK(double_cosets(sym(6), sym_embed(4, 6)).cosets.size() == 7);
  CHECK(double_cosets(sym(6), sym_embed(3, 6)).cosets.size() == 34);
  // Brute-force orbit count of S4 x S4 on S8 gives 209.
  CHECK(double_cosets(sym(8), sym_embed(4, 8)).cosets.size() == 209);
}

TEST_CASE("property: decompositions partition G") {
  std::vector<std::pair<PermGroup, PermGroup>> cases{
      {sym(6), sym_embed(3, 6)}, {sym(6), alt(6)}, {sym(5), cyclic(5)}, {alt(7), tilde_sym(5, 7)},
      {sym(6), PermGroup(6, {cyc({{1, 2}, {3, 4}}, 6), cyc({{5, 6}}, 6)})}};
  for (const auto& [g, h] : cases) {
    auto dc = double_cosets(g, h);
    std::uint64_t total = 0;
    std::set<Permutation> reps;
    for (const auto& c : dc.cosets) {
      total += c.size;
      CHECK(c.size % h.order() == 0);
      CHECK((h.order() * h.order()) % c.size == 0);
      CHECK(c.size == h.order() * c.transversal_indices.size());
      reps.insert(c.rep);
    }
    CHECK(total == g.order());
    CHECK(reps.size() == dc.cosets.size());
    CHECK(dc.cosets.front().rep.is_identity());
    // Sizes agree with direct enumeration and representatives are distinct.
    if (g.order() <= 720) {
      std::set<Permutation> seen;
      for (const auto& c : dc.cosets) {
        auto d = double_coset_of(c.rep, h);
        CHECK(d.size() == c.size);
        for (const auto& x : d) CHECK(seen.insert(x).second);
      }
    }
  }
}

TEST_CASE("stabilizers") {
  auto h = sym_embed(3, 6);
  CHECK(stabilizer(Permutation(6), h).group.order() == 6);

  auto a5 = alt(5);
  CHECK(stabilizer(cyc({{1, 2}}, 5), a5).group.order() == 60);

  auto g = cyc({{1, 2, 7, 8}, {3, 11, 9, 5}, {4, 12, 10, 6}}, 12);
  auto s = stabilizer(g, cyclic(12));
  CHECK(s.group.order() == 2);
  CHECK(s.group.contains(g * g));
}

TEST_CASE("property: stabilizers within a double coset are conjugate in H") {
  auto g = sym(6);
  auto h = PermGroup(6, {cyc({{1, 2, 3}}, 6), cyc({{1, 2}}, 6), cyc({{4, 5}}, 6)});
  auto dc = double_cosets(g, h);
  std::mt19937_64 rng(8);
  const auto& hs = h.elements();
  for (const auto& c : dc.cosets) {
    auto s = stabilizer(c.rep, h);
    for (int k = 0; k < 3; ++k) {
      const auto& a = hs[rng() % hs.size()];
      const auto& b = hs[rng() % hs.size()];
      auto s2 = stabilizer(a * c.rep * b, h);
      CHECK(s2.group.order() == s.group.order());
      // S(a g b) = a S(g) a^-1.
      for (const auto& x : s.group.elements()) CHECK(s2.group.contains(conjugate(a, x)));
      for (const auto& x : s2.group.elements()) CHECK(h.contains(x));
    }
  }
}

TEST_CASE("normal form examples") {
  CHECK(normal_form_Sl(cyc({{1, 4, 2, 5}}, 5), 3) == cyc({{1, 5}, {2, 4}}, 5));
  CHECK(normal_form_Sl(cyc({{1, 2, 3}}, 3), 3).is_identity());
  CHECK(normal_form_Sl(cyc({{5, 6}}, 6), 4) == cyc({{5, 6}}, 6));
  CHECK_THROWS_AS(normal_form_Sl(Permutation(4), 5), std::invalid_argument);
  CHECK_THROWS_AS(normal_form_Sl(Permutation(4), 0), std::invalid_argument);
}

TEST_CASE("null classification examples") {
  CHECK(is_null_coset_Sl(cyc({{1, 5, 6}}, 6), 4));
  CHECK_FALSE(is_null_coset_Sl(Permutation(6), 4));
  CHECK_FALSE(is_null_coset_Sl(cyc({{1, 4}, {2, 5}}, 6), 3));
  CHECK_FALSE(is_null_coset_Sl(cyc({{1, 5}}, 6), 4));
  CHECK(is_null_coset_Sl(cyc({{5, 6}}, 6), 4) == false);
}

TEST_CASE("property: normal form stays in the double coset") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 3; n <= 9; ++n) {
    auto g = sym(n);
    for (std::size_t l = 1; l <= n; ++l) {
      auto sl = sym_embed(l, n);
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<Point> img(n);
        for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Point>(k);
        std::shuffle(img.begin(), img.end(), rng);
        auto sigma = Permutation::from_images(img);
        auto nf = normal_form_Sl_tracked(sigma, l);
        CHECK(sigma * nf.multiplier == nf.form);
        CHECK(sl.contains(nf.multiplier));
        // At most one small letter per cycle.
        for (const auto& cycle : nf.form.cycles()) {
          int small = 0;
          for (int x : cycle) small += (static_cast<std::size_t>(x) <= l) ? 1 : 0;
          CHECK(small <= 1);
        }
        auto relabeled = relabeled_normal_form_Sl(sigma, l);
        CHECK(relabeled_normal_form_Sl(relabeled, l) == relabeled);
        // Invariant under both-sided multiplication by S_l.
        const auto& ls = sl.elements();
        const auto& a = ls[rng() % ls.size()];
        const auto& b = ls[rng() % ls.size()];
        CHECK(relabeled_normal_form_Sl(a * sigma * b, l) == relabeled);
      }
    }
  }
}

TEST_CASE("census values") {
  CHECK(census_Sl(3, 6) == Census{34, 20});
  // 197 and 154 would leave out the twelve null cosets of shape
  // (a,x,y)(b,z)(c,w) with a,b,c small and x,y,z,w large.
  CHECK(census_Sl(4, 8) == Census{209, 166});
  for (std::size_t n = 4; n <= 8; ++n) CHECK(census_Sl(n - 2, n) == Census{7, 2});
}

TEST_CASE("orbit census agrees with normal-form census") {
  CHECK(census_normal_form(3, 6) == Census{34, 20});
  CHECK(census_normal_form(4, 8) == Census{209, 166});
  CHECK(census_normal_form(2, 5) == census_Sl(2, 5));
}

TEST_CASE("census depends only on n - l when 2l >= n") {
  for (std::size_t n = 2; n < 8; ++n) {
    for (std::size_t l = 1; l <= n; ++l) {
      if (2 * l < n) continue;
      CHECK(census_Sl(l, n) == census_Sl(l + 1, n + 1));
    }
  }
}
