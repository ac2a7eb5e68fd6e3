#include "doctest.h"

#include <cstdio>
#include <map>
#include <vector>

#include "cblab/fusion.hpp"
#include "cblab/weights.hpp"

using namespace cblab;

namespace {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, std::int64_t>;

// Schur polynomial in k variables, summed over semistandard fillings.
Poly schur(const Partition& shape, int k) {
  Poly out;
  std::vector<std::vector<int>> t;
  for (int len : shape)
    if (len > 0) t.emplace_back(len, 0);
  if (static_cast<int>(t.size()) > k) return out;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    for (int j = 0; j < static_cast<int>(t[i].size()); ++j) cells.emplace_back(i, j);
  auto fill = [&](auto&& self, std::size_t at) -> void {
    if (at == cells.size()) {
      Monomial m(k, 0);
      for (auto& row : t)
        for (int x : row) ++m[x - 1];
      ++out[m];
      return;
    }
    auto [i, j] = cells[at];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= k; ++v) {
      t[i][j] = v;
      self(self, at + 1);
    }
  };
  fill(fill, 0);
  return out;
}

Poly times(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  return out;
}

// Peel off the lex-leading monomial, which is always a dominant partition.
std::map<Partition, std::int64_t> schur_expand(Poly p, int k) {
  std::map<Partition, std::int64_t> out;
  for (;;) {
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    if (p.empty()) break;
    auto lead = p.rbegin();
    Partition nu = lead->first;
    std::int64_t c = lead->second;
    out[nu] = c;
    for (auto& [m, v] : schur(nu, k)) p[m] -= c * v;
  }
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  Partition p(rows, 0);
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i == rows) {
      out.push_back(p);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      p[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, cols);
  return out;
}

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

TEST_SUITE("fusion") {

TEST_CASE("LR coefficients: small cases") {
  CHECK(lr_coefficient({1}, {1}, {2}) == 1);
  CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2}, {2}, {3, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficient({3, 1}, {}, {3, 1}) == 1);
  CHECK(lr_coefficient({1}, {1}, {3}) == 0);
}

TEST_CASE("LR expansion agrees with Schur polynomial products") {
  for (int k = 1; k <= 3; ++k) {
    auto box = partitions_in_box(k, 3);
    for (const auto& a : box) {
      for (const auto& b : box) {
        int size = 0;
        for (int x : a) size += x;
        for (int x : b) size += x;
        if (size > 7) continue;
        auto oracle = schur_expand(times(schur(a, k), schur(b, k)), k);
        auto got = lr_expand(a, b, k);
        std::map<Partition, std::int64_t> g, o;
        for (auto& [p, c] : got)
          if (c) g[trimmed(p)] = c;
        for (auto& [p, c] : oracle)
          if (c) o[trimmed(p)] = c;
        CHECK(g == o);
      }
    }
  }
}

TEST_CASE("quantum products on small Grassmannians") {
  auto q = quantum_product({1, 0}, {1, 0}, 1, 1);  // Gr(2,3)
  REQUIRE(q.terms.size() == 1);
  CHECK(q.terms.begin()->first == std::make_pair(Partition{1, 1}, 0));
  CHECK(q.terms.begin()->second == 1);

  auto q2 = quantum_product({2, 0}, {2, 0}, 1, 2);  // Gr(2,4)
  std::erase_if(q2.terms, [](const auto& kv) { return kv.second == 0; });
  REQUIRE(q2.terms.size() == 1);
  CHECK(q2.terms.begin()->first == std::make_pair(Partition{2, 2}, 0));

  auto q3 = quantum_product({2, 2}, {2, 0}, 1, 2);
  std::erase_if(q3.terms, [](const auto& kv) { return kv.second == 0; });
  REQUIRE(q3.terms.size() == 1);
  CHECK(q3.terms.begin()->first == std::make_pair(Partition{1, 1}, 1));
  CHECK(q3.terms.begin()->second == 1);
}

TEST_CASE("quantum products are homogeneous and stay in the box") {
  for (int r = 1; r <= 2; ++r) {
    for (int l = 1; l <= 3; ++l) {
      auto box = partitions_in_box(r + 1, l);
      for (const auto& a : box)
        for (const auto& b : box) {
          auto q = quantum_product(a, b, r, l);
          int lhs = 0;
          for (int x : a) lhs += x;
          for (int x : b) lhs += x;
          for (auto& [key, c] : q.terms) {
            auto& [nu, d] = key;
            REQUIRE(nu.size() == static_cast<std::size_t>(r + 1));
            CHECK(nu[0] <= l);
            int s = 0;
            for (int x : nu) s += x;
            CHECK(lhs == s + d * (r + 1 + l));
            CHECK(d >= 0);
          }
        }
    }
  }
}

TEST_CASE("full-row shortcut matches the generic quantum product") {
  for (int r = 1; r <= 3; ++r) {
    for (int l = 1; l <= 4; ++l) {
      Partition row(r + 1, 0);
      row[0] = l;
      for (const auto& p : partitions_in_box(r + 1, l)) {
        auto q = quantum_product(p, row, r, l);
        std::erase_if(q.terms, [](const auto& kv) { return kv.second == 0; });
        auto [nu, d] = times_full_row(p, l);
        REQUIRE(q.terms.size() == 1);
        CHECK(q.terms.begin()->first == std::make_pair(nu, d));
        CHECK(q.terms.begin()->second == 1);
      }
    }
  }
}

TEST_CASE("rim hook reduction") {
  // Gr(2,4): (4) -> -q (sign of a height-1 strip), (3,1) -> q (height 2)
  auto a = rim_hook_reduce({4, 0}, 1, 2);
  CHECK_FALSE(a.vanishes);
  CHECK(a.degree == 1);
  CHECK(a.sign == -1);
  CHECK(a.nu == Partition{0, 0});
  auto b = rim_hook_reduce({3, 1}, 1, 2);
  CHECK_FALSE(b.vanishes);
  CHECK(b.degree == 1);
  CHECK(b.sign == 1);
  CHECK(rim_hook_reduce({3, 0}, 1, 2).vanishes);
  auto c = rim_hook_reduce({2, 1}, 1, 2);
  CHECK(c.degree == 0);
  CHECK(c.nu == Partition{2, 1});
}

TEST_CASE("fuse3 small values") {
  auto w = [](int a) { return Weight::omega(1, 1, a); };
  CHECK(fuse3(w(1), w(1), w(0), 1) == 1);
  CHECK(fuse3(w(2), w(2), w(0), 2) == 1);
  CHECK(fuse3(w(2), w(2), w(2), 2) == 0);
  CHECK(fuse3(w(2), w(2), w(2), 3) == 1);
  CHECK(fuse3(w(1), w(1), w(2), 2) == 1);
  CHECK(fuse3_sl2_oracle(1, 1, 0, 1) == 1);
  CHECK(fuse3_sl2_oracle(2, 2, 2, 2) == 0);
  CHECK(fuse3_sl2_oracle(2, 2, 2, 3) == 1);
}

TEST_CASE("vacuum propagation") {
  for (int r = 1; r <= 3; ++r) {
    const int l = 3;
    auto all = enumerate_level_weights(r, l);
    for (const auto& mu : all)
      for (const auto& nu : all)
        CHECK(fuse3(Weight::zero(r), mu.weight, nu.weight, l) ==
              (nu.weight == dual(mu.weight) ? 1 : 0));
  }
}

TEST_CASE("sl2 fusion matches the closed form exhaustively") {
  std::size_t triples = 0;
  for (int l = 0; l <= 6; ++l)
    for (int a = 0; a <= l; ++a)
      for (int b = 0; b <= l; ++b)
        for (int c = 0; c <= l; ++c) {
          ++triples;
          auto w = [](int x) { return Weight::omega(1, 1, x); };
          CHECK(fuse3(w(a), w(b), w(c), l) == fuse3_sl2_oracle(a, b, c, l));
        }
  CHECK(triples == 784);
}

TEST_CASE("fuse3 is symmetric and invariant under duality") {
  for (int r = 1; r <= 3; ++r) {
    for (int l = 1; l <= (r == 3 ? 2 : 3); ++l) {
      auto all = enumerate_level_weights(r, l);
      for (const auto& a : all)
        for (const auto& b : all)
          for (const auto& c : all) {
            auto n = fuse3(a.weight, b.weight, c.weight, l);
            CHECK(n >= 0);
            CHECK(n == fuse3(b.weight, c.weight, a.weight, l));
            CHECK(n == fuse3(b.weight, a.weight, c.weight, l));
            CHECK(n == fuse3(dual(a.weight), dual(b.weight), dual(c.weight), l));
          }
    }
  }
}

TEST_CASE("fusion cache round trip") {
  FusionCache cache;
  auto w = [](int x) { return Weight::omega(1, 1, x); };
  cache.insert(3, w(1), w(2), w(1), 1);
  CHECK(cache.lookup(3, w(2), w(1), w(1)) == 1);
  CHECK_FALSE(cache.lookup(3, w(1), w(1), w(1)).has_value());
  const std::string path = "fusion_cache_roundtrip.jsonl";
  cache.save(path);
  FusionCache back;
  CHECK(back.load(path) == 1);
  CHECK(back.lookup(3, w(1), w(1), w(2)) == 1);
  std::remove(path.c_str());
}

}  // TEST_SUITE
