#include "doctest.h"

#include <set>

#include <algorithm>
#include <random>

#include "cblab/fusion.hpp"
#include "cblab/ranks.hpp"
#include "cblab/reproduce.hpp"

using namespace cblab;

namespace {

Weight w1(int a) { return Weight::omega(1, 1, a); }

BundleSpec random_spec(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick_r(1, 2), pick_l(1, 3), pick_g(0, 2);
  BundleSpec s;
  s.r = pick_r(rng);
  s.level = pick_l(rng);
  s.genus = pick_g(rng);
  int lo = s.genus == 0 ? 3 : (s.genus == 1 ? 1 : 0);
  int hi = s.genus == 0 ? 5 : (s.genus == 1 ? 3 : 1);
  int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  const auto& all = level_weight_set(s.r, s.level);
  std::uniform_int_distribution<std::size_t> pick_w(0, all.size() - 1);
  for (int i = 0; i < n; ++i) s.weights.push_back(all[pick_w(rng)]);
  return s;
}

}  // namespace

TEST_SUITE("ranks") {

TEST_CASE("small ranks") {
  CHECK(rank_genus0({w1(1), w1(1), w1(1), w1(1)}, 1) == 1);
  CHECK(rank_genus0({}, 3) == 1);
  CHECK(rank_genus0({w1(0)}, 3) == 1);
  CHECK(rank_genus0({w1(1)}, 3) == 0);
  CHECK(rank_genus0({w1(2), w1(2)}, 3) == 1);
  CHECK(rank_genus0({w1(2), w1(1)}, 3) == 0);
  // sl2 level 1 in genus 2 with no points: 2^2 = 4 theta functions
  CHECK(rank(BundleSpec{1, 1, 2, {}}) == 4);
  CHECK(rank(BundleSpec{2, 1, 2, {}}) == 9);
}

TEST_CASE("genus one ranks") {
  for (int l = 0; l <= 6; ++l)
    for (int mu = 0; mu <= l; ++mu)
      CHECK(rank(1, {w1(mu)}, l) == (mu % 2 == 0 ? BigInt(l + 1 - mu) : BigInt(0)));
}

TEST_CASE("rank sums over doubled weights") {
  for (int m = 0; m <= 5; ++m) {
    BigInt sum = 0;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) sum += rank_genus0({w1(a), w1(a), w1(b), w1(b)}, m);
    CHECK(sum == binom(m + 3, 3));
  }
}

TEST_CASE("rank sequences of the five-point families") {
  auto scroll = rank_sequence(family_scroll_m05(), 4);
  for (int m = 0; m <= 4; ++m) CHECK(scroll.values[m] == BigInt((m + 1) * (3 * m + 2) / 2));
  auto ver = rank_sequence(family_veronese_m05(), 3);
  for (int m = 0; m <= 3; ++m) CHECK(ver.values[m] == BigInt((m + 1) * (2 * m + 1)));
}

TEST_CASE("DP agrees with the direct dictionary rank") {
  for (int r = 1; r <= 3; ++r) {
    for (int l = 1; l <= (r == 3 ? 2 : 4); ++l) {
      const auto& all = level_weight_set(r, l);
      std::mt19937 rng(1000 * r + l);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int n = 3; n <= 5; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
          std::vector<Weight> ws;
          for (int i = 0; i < n; ++i) ws.push_back(all[pick(rng)]);
          CHECK(rank_genus0(ws, l) == rank_dictionary(ws, l));
        }
      }
    }
  }
}

TEST_CASE("ranks do not depend on order or tree shape") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    BundleSpec s = random_spec(rng);
    BigInt base = rank(s);
    CHECK(rank(s, TreeShape::balanced) == base);
    auto ws = s.weights;
    std::shuffle(ws.begin(), ws.end(), rng);
    BundleSpec t = s;
    t.weights = ws;
    CHECK(rank(t) == base);
    std::reverse(t.weights.begin(), t.weights.end());
    CHECK(rank(t, TreeShape::balanced) == base);
  }
}

TEST_CASE("plussing with index sum divisible by r+1 keeps genus-0 ranks") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    BundleSpec s = random_spec(rng);
    s.genus = 0;
    while (s.n() < 3) s.weights.push_back(Weight::zero(s.r));
    std::uniform_int_distribution<int> pick_j(0, s.r);
    std::vector<int> js(s.n());
    int total = 0;
    for (int i = 0; i + 1 < s.n(); ++i) total += js[i] = pick_j(rng);
    js.back() = ((s.r + 1) - total % (s.r + 1)) % (s.r + 1);
    std::vector<Weight> rotated;
    for (int i = 0; i < s.n(); ++i)
      rotated.push_back(pluss(LevelWeight(s.weights[i], s.level), js[i]).weight);
    CHECK(rank_genus0(rotated, s.level) == rank_genus0(s.weights, s.level));
  }
}

TEST_CASE("factorization conservation on random specs") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    BundleSpec s = random_spec(rng);
    CAPTURE(trial);
    BigInt total = rank(s);
    for (const auto& st : boundary_strata(s.genus, s.n())) {
      BigInt sum = 0;
      for (const auto& e : restriction_data(s, st)) {
        CHECK(e.rank1 > 0);
        CHECK(e.rank2 > 0);
        sum += e.rank1 * e.rank2;
      }
      CHECK(sum == total);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("restriction data examples") {
  auto m2 = family_level_one_m2();
  auto data = restriction_data(m2, BoundaryStratum::separating(1, {}));
  REQUIRE(data.size() == 1);
  CHECK(data[0].mu.weight.is_zero());
  CHECK(data[0].rank1 == 2);
  CHECK(data[0].rank2 == 2);

  for (int k = 1; k <= 2; ++k) {
    auto g1 = family_genus_one(k, 2);
    auto irr = restriction_data(g1, BoundaryStratum::irreducible());
    std::set<Weight> mus;
    for (const auto& e : irr) mus.insert(e.mu.weight);
    CHECK(mus == std::set<Weight>{w1(k), w1(k + 1)});
  }

  auto quad = family_quadric_m05();
  auto q = restriction_data(quad, BoundaryStratum::separating(0, {1, 2, 3}));
  REQUIRE(q.size() == 1);
  CHECK(q[0].rank1 * q[0].rank2 == rank(quad));
}

TEST_CASE("boundary strata") {
  CHECK(boundary_strata(0, 4).size() == 3);
  CHECK(boundary_strata(0, 5).size() == 10);
  CHECK(boundary_strata(2, 0).size() == 2);
  CHECK_THROWS_AS(validate_stratum(BoundaryStratum::separating(0, {1}), 0, 4), Error);
}

}  // TEST_SUITE
