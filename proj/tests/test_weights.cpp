#include "doctest.h"

#include <set>

#include "cblab/rational.hpp"
#include "cblab/weights.hpp"

using namespace cblab;

namespace {

Weight sl(int r, std::vector<int> fund) {
  REQUIRE(static_cast<int>(fund.size()) == r);
  return Weight::from_fundamental(fund);
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("level weight enumeration") {
  auto w = enumerate_level_weights(1, 2);
  REQUIRE(w.size() == 3);
  CHECK(w[0].weight == Weight::zero(1));
  CHECK(w[1].weight == Weight::omega(1, 1));
  CHECK(w[2].weight == Weight::omega(1, 1, 2));
  CHECK(enumerate_level_weights(3, 7).size() == 120);
  auto w1 = enumerate_level_weights(1, 1);
  REQUIRE(w1.size() == 2);
  CHECK(w1[1].weight == Weight::omega(1, 1));
}

TEST_CASE("enumeration count matches brute force") {
  for (int r = 1; r <= 4; ++r) {
    for (int l = 0; l <= 10; ++l) {
      // brute force over fundamental coordinates with sum <= l
      std::size_t brute = 0;
      std::vector<int> c(r, 0);
      for (;;) {
        int s = 0;
        for (int x : c) s += x;
        if (s <= l) ++brute;
        int k = 0;
        while (k < r && ++c[k] > l) c[k++] = 0;
        if (k == r) break;
      }
      CHECK(enumerate_level_weights(r, l).size() == brute);
      CHECK(BigInt(static_cast<long>(brute)) == binom(l + r, r));
    }
  }
}

TEST_CASE("dual") {
  CHECK(dual(Weight::omega(1, 1, 5)) == Weight::omega(1, 1, 5));
  CHECK(dual(Weight(2, {1, 0, 0})) == Weight(2, {1, 1, 0}));
  Weight w = sl(3, {1, 3, 1});
  CHECK(w.parts() == std::vector<int>{5, 4, 1, 0});
  CHECK(dual(w) == w);
  for (int r = 1; r <= 4; ++r) {
    for (const auto& lw : enumerate_level_weights(r, 4)) {
      const Weight& x = lw.weight;
      CHECK(dual(dual(x)) == x);
      CHECK(x.size() + dual(x).size() == (r + 1) * x.part(0));
    }
    CHECK(dual(Weight::zero(r)) == Weight::zero(r));
  }
}

TEST_CASE("scaling bundles") {
  BundleSpec s{1, 5, 0, {Weight::omega(1, 1, 2), Weight::omega(1, 1, 2), Weight::omega(1, 1, 2),
                         Weight::omega(1, 1, 2)}};
  CHECK(scale_bundle(s, 1) == s);
  auto s3 = scale_bundle(s, 3);
  CHECK(s3.level == 15);
  for (const auto& w : s3.weights) CHECK(w == Weight::omega(1, 1, 6));

  BundleSpec q{3, 7, 0, {sl(3, {1, 3, 1})}};
  auto q2 = scale_bundle(q, 2);
  CHECK(q2.level == 14);
  CHECK(q2.weights[0] == sl(3, {2, 6, 2}));

  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) CHECK(scale_bundle(scale_bundle(q, a), b) == scale_bundle(q, a * b));
}

TEST_CASE("plussing") {
  CHECK(pluss(LevelWeight(Weight::omega(1, 1, 2), 5), 1).weight == Weight::omega(1, 1, 3));
  LevelWeight x(sl(3, {1, 3, 1}), 7);
  CHECK(pluss(x, 0) == x);
  CHECK(pluss(LevelWeight(Weight::omega(3, 1, 7), 7), 2).weight == Weight::omega(3, 3, 7));

  for (int r = 1; r <= 3; ++r) {
    for (int l = 0; l <= 4; ++l) {
      auto all = enumerate_level_weights(r, l);
      for (int j = 0; j <= r; ++j) {
        std::set<Weight> image;
        for (const auto& w : all) {
          auto p = pluss(w, j);
          CHECK(p.level == l);
          CHECK(p.weight.part(0) <= l);
          image.insert(p.weight);
        }
        CHECK(image.size() == all.size());
      }
      // r+1 single steps come back to the start; pluss(., j) is j single steps
      for (const auto& w : all) {
        LevelWeight cur = w;
        for (int k = 1; k <= r; ++k) {
          cur = pluss(cur, 1);
          CHECK(cur == pluss(w, k));
        }
        CHECK(pluss(cur, 1) == w);
      }
    }
  }
}

TEST_CASE("plussing rotates affine Dynkin labels") {
  // label vector (c_0, c_1, .., c_r) with c_0 = l - sum c_i rotates by one
  for (int r = 1; r <= 3; ++r) {
    for (const auto& w : enumerate_level_weights(r, 3)) {
      auto c = w.weight.fundamental_coords();
      int c0 = w.level;
      for (int x : c) c0 -= x;
      auto p = pluss(w, 1).weight.fundamental_coords();
      CHECK(p[0] == c0);
      for (int i = 1; i < r; ++i) CHECK(p[i] == c[i - 1]);
    }
  }
}

TEST_CASE("casimir") {
  CHECK(casimir(Weight::zero(3)) == 0);
  CHECK(casimir(Weight::omega(1, 1, 2)) == 4);
  CHECK(casimir(Weight::omega(1, 1)) == frac(3, 2));
  for (int r = 1; r <= 3; ++r) {
    for (const auto& lw : enumerate_level_weights(r, 4)) {
      Rational c = casimir(lw.weight);
      CHECK(c == casimir(dual(lw.weight)));
      CHECK(c >= 0);
      CHECK((c == 0) == lw.weight.is_zero());
    }
  }
}

TEST_CASE("malformed weights are rejected") {
  CHECK_THROWS_AS(Weight(2, {1, 2, 0}), Error);
  CHECK_THROWS_AS(Weight(2, {2, 1, 1}), Error);
  CHECK_THROWS_AS(Weight(2, {2, 1}), Error);
  BundleSpec s{1, 1, 0, {Weight::omega(1, 1, 2)}};
  CHECK_THROWS_AS(s.validate(), Error);
}

}  // TEST_SUITE
