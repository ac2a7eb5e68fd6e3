#include "doctest.h"

#include "cblab/chern.hpp"
#include "cblab/picard.hpp"
#include "cblab/reproduce.hpp"

using namespace cblab;

namespace {

Weight w1(int a) { return Weight::omega(1, 1, a); }

std::size_t fcurve_with_doubleton(const std::vector<int>& pair) {
  auto fs = fcurves(5);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& b : fs[i].blocks)
      if (b == pair) return i;
  FAIL("no such F-curve");
  return 0;
}

Rational Q(long p, long q = 1) { return frac(p, q); }

}  // namespace

TEST_SUITE("classes") {

TEST_CASE("F-curve counts") {
  CHECK(fcurves(4).size() == 1);
  CHECK(fcurves(5).size() == 10);
  CHECK(fcurves(6).size() == 65);
}

TEST_CASE("boundary pairings with F-curves") {
  auto i = fcurve_with_doubleton({1, 3});
  auto f = fcurves(5)[i];
  CHECK(pair_boundary_fcurve({2, 5}, f, 5) == 1);
  CHECK(pair_boundary_fcurve({1, 3}, f, 5) == -1);
  CHECK(pair_boundary_fcurve({1, 4}, f, 5) == 0);
}

TEST_CASE("nonadjacent basis round trip") {
  std::array<Rational, 5> x{Q(1), Q(-2, 3), Q(0), Q(5), Q(7, 2)};
  CHECK(to_nonadjacent_basis_n5(from_nonadjacent_basis_n5(x)) == x);
  std::array<Rational, 5> zero{};
  CHECK(to_nonadjacent_basis_n5(DivisorClassM0n{5, std::vector<Rational>(10)}) == zero);
  // every boundary divisor pairs consistently
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) {
      auto c = boundary_class({a, b}, 5);
      CHECK(from_nonadjacent_basis_n5(to_nonadjacent_basis_n5(c)) == c);
    }
}

TEST_CASE("c1 of the five-point families in the nonadjacent basis") {
  auto scroll = to_nonadjacent_basis_n5(c1_fvector(family_scroll_m05()));
  CHECK(scroll == std::array<Rational, 5>{Q(0), Q(2), Q(0), Q(2), Q(2)});
  auto ver = to_nonadjacent_basis_n5(c1_fvector(family_veronese_m05()));
  CHECK(ver == std::array<Rational, 5>{Q(0), Q(1), Q(2), Q(1), Q(3)});
  auto fv = c1_fvector(family_scroll_m05());
  CHECK(fv.values[fcurve_with_doubleton({1, 3})] == 2);
}

TEST_CASE("degrees on M04") {
  CHECK(deg_m04({w1(2), w1(2), w1(2), w1(2)}, 2) == 2);
  CHECK(deg_m04({w1(1), w1(1), w1(2), w1(2)}, 2) == 1);
  for (int l = 0; l <= 4; ++l) CHECK(deg_m04({w1(0), w1(0), w1(0), w1(0)}, l) == 0);
}

TEST_CASE("degrees on M04 are invariant under duality") {
  for (int r = 1; r <= 2; ++r) {
    const int l = 2;
    const auto& all = level_weight_set(r, l);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          for (const auto& d : all) {
            BigInt x = deg_m04({a, b, c, d}, l);
            CHECK(x == deg_m04({dual(a), dual(b), dual(c), dual(d)}, l));
            CHECK(x == deg_m04({b, a, d, c}, l));
          }
  }
}

TEST_CASE("genus one degrees and ranks") {
  CHECK(c1_genus1(0, 2) == Q(-1, 2));
  CHECK(r_genus1(0, 2) == 3);
  CHECK(c1_genus1(1, 3) == 0);
  CHECK(r_genus1(1, 3) == 0);
  CHECK(elliptic_pairing_m2(2) == Q(-19, 12));
  CHECK(pigtail_pairing_m2(2) == 4);
}

TEST_CASE("solving for the two M2 boundary coefficients") {
  CHECK(m2_solve(Q(1), Q(-1, 12)) == std::make_pair(Q(0), Q(1)));
  CHECK(m2_solve(Q(0), Q(0)) == std::make_pair(Q(0), Q(0)));
  CHECK(m2_solve(Q(-2), Q(1)) == std::make_pair(Q(1), Q(0)));
}

TEST_CASE("tabulated classes") {
  auto m3 = tabulated_classes("coble-quartic");
  CHECK(m3.space == SmallSpace::M3);
  CHECK(m3.entries.at(4) == DivisorClassSmall(SmallSpace::M3, {Q(329), Q(-128), Q(-64)}));
  CHECK(m3.entries.at(1) == DivisorClassSmall(SmallSpace::M3, {Q(4), Q(-1), Q(0)}));
  CHECK(m3.entries.at(9) == DivisorClassSmall(SmallSpace::M3, {Q(13068), Q(-8151), Q(-4752)}));
  auto m2 = tabulated_classes("coble-cubic");
  CHECK(m2.entries.at(2).normalized() == DivisorClassSmall(SmallSpace::M2, {Q(0), Q(-11), Q(9)}));
  CHECK(m2.entries.at(1) == DivisorClassSmall(SmallSpace::M2, {Q(9), Q(-2), Q(0)}));
  CHECK(m2.entries.at(5) == DivisorClassSmall(SmallSpace::M2, {Q(3330), Q(-964), Q(-738)}));
  auto m21 = tabulated_classes("two-quadrics");
  CHECK(m21.entries.size() == 7);
  CHECK(m21.entries.at(4) ==
        DivisorClassSmall(SmallSpace::M21, {Q(102), Q(170), Q(-281, 5), Q(-312, 5)}));
  CHECK(m21.entries.at(1) ==
        DivisorClassSmall(SmallSpace::M21, {Q(9, 2), Q(3), Q(-5, 4), Q(-3, 2)}));
  CHECK_THROWS_AS(tabulated_classes("nope"), Error);
}

TEST_CASE("Mumford relation and the hyperelliptic class") {
  DivisorClassSmall lam(SmallSpace::M2, {Q(1), Q(0), Q(0)});
  DivisorClassSmall rhs(SmallSpace::M2, {Q(0), Q(1, 10), Q(1, 5)});
  CHECK(lam.equivalent(rhs));
  CHECK_FALSE(lam == rhs);
  auto h = hyperelliptic_m3();
  CHECK(h == DivisorClassSmall(SmallSpace::M3, {Q(9), Q(-1), Q(-3)}));
  auto split = split_h_delta1(h * Q(2) + DivisorClassSmall(SmallSpace::M3, {Q(0), Q(0), Q(5)}));
  REQUIRE(split.has_value());
  CHECK(split->first == 2);
  CHECK(split->second == 5);
  CHECK_FALSE(split_h_delta1(DivisorClassSmall(SmallSpace::M3, {Q(1), Q(0), Q(0)})).has_value());
}

}  // TEST_SUITE
