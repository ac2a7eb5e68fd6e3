#include "cblab/chern.hpp"

#include <array>
#include <mutex>

#include "cblab/fusion.hpp"
#include "cblab/parallel.hpp"
#include "cblab/ranks.hpp"

namespace cblab {

namespace {

std::mutex deg_mu;
std::map<std::pair<int, std::vector<Weight>>, BigInt> deg_memo;

}  // namespace

BigInt deg_m04(const std::vector<Weight>& weights, int level) {
  if (weights.size() != 4) throw Error("deg_m04: need exactly four weights");
  const int r = weights[0].r();
  for (const auto& w : weights) {
    if (w.r() != r) throw Error("deg_m04: weights of different rank");
    if (w.level_needed() > level) throw Error("deg_m04: weight exceeds level");
  }
  auto key = std::make_pair(level, weights);
  std::sort(key.second.begin(), key.second.end());
  {
    std::lock_guard lock(deg_mu);
    auto it = deg_memo.find(key);
    if (it != deg_memo.end()) return it->second;
  }

  const BigInt rk = rank_genus0(weights, level);
  Rational num = 0;
  if (rk != 0) {
    Rational cas = 0;
    for (const auto& w : weights) cas += casimir(w);
    num += Rational(rk) * cas;
  }
  static constexpr std::array<std::array<int, 4>, 3> channels{
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& ch : channels) {
    const auto left = fusion_product(weights[ch[0]], weights[ch[1]], level);
    const auto right = fusion_product(weights[ch[2]], weights[ch[3]], level);
    for (const auto& [mu, n1] : left->entries) {
      const auto n2 = right->at(dual(mu));
      if (n2 != 0) num -= casimir(mu) * Rational(BigInt(n1) * n2);
    }
  }
  const Rational deg = num / Rational(2 * (level + r + 1));
  if (!is_integer(deg)) {
    throw Error("deg_m04: non-integral degree " + to_string(deg) + " (normalization bug)");
  }
  const BigInt value = to_bigint(deg);
  std::lock_guard lock(deg_mu);
  deg_memo.emplace(std::move(key), value);
  return value;
}

BigInt deg_m04(const BundleSpec& spec) {
  spec.validate();
  if (spec.genus != 0 || spec.n() != 4) throw Error("deg_m04: spec must live on M_{0,4}");
  return deg_m04(spec.weights, spec.level);
}

DivisorClassM0n c1_fvector(const BundleSpec& spec) {
  spec.validate();
  if (spec.genus != 0 || spec.n() < 5) throw Error("c1_fvector: spec must live on M_{0,n}, n >= 5");
  const auto curves = fcurves(spec.n());
  DivisorClassM0n out{spec.n(), std::vector<Rational>(curves.size())};
  parallel_for(curves.size(), [&](std::size_t ci) {
    // For each block, the weights mu at the attaching point with
    // rank(lambda(block) + {mu*}) != 0, with that rank.
    std::array<std::vector<std::pair<Weight, BigInt>>, 4> legs;
    for (int b = 0; b < 4; ++b) {
      const auto& block = curves[ci].blocks[b];
      if (block.size() == 1) {
        legs[b].emplace_back(spec.weights[block[0] - 1], 1);
        continue;
      }
      std::vector<Weight> ws;
      for (int p : block) ws.push_back(spec.weights[p - 1]);
      for (auto& [nu, c] : rank_vector_genus0(ws, spec.level)) legs[b].emplace_back(dual(nu), c);
    }
    BigInt total = 0;
    for (const auto& [m0, c0] : legs[0]) {
      for (const auto& [m1, c1] : legs[1]) {
        for (const auto& [m2, c2] : legs[2]) {
          for (const auto& [m3, c3] : legs[3]) {
            const BigInt d = deg_m04({m0, m1, m2, m3}, spec.level);
            if (d != 0) total += d * c0 * c1 * c2 * c3;
          }
        }
      }
    }
    out.values[ci] = Rational(total);
  });
  return out;
}

Rational c1_genus1(int mu, int m) {
  if (mu < 0 || mu > m) throw Error("c1_genus1: need 0 <= mu <= m");
  if (mu % 2 != 0) return 0;
  const BigInt a = mu, l = m;
  return -frac(a * a - 3 * l * a + 2 * l * l - a + 2 * l, 24);
}

BigInt r_genus1(int mu, int m) {
  if (mu < 0 || mu > m) throw Error("r_genus1: need 0 <= mu <= m");
  return mu % 2 != 0 ? BigInt(0) : BigInt(m + 1 - mu);
}

Rational elliptic_pairing_m2(int m) {
  Rational s = 0;
  for (int mu = 0; mu <= m; ++mu) s += Rational(r_genus1(mu, m)) * c1_genus1(mu, m);
  return s;
}

BigInt pigtail_pairing_m2(int m) {
  BigInt s = 0;
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; b <= m; ++b) {
      const Weight wa = Weight::omega(1, 1, a), wb = Weight::omega(1, 1, b);
      s += deg_m04({wa, wa, wb, wb}, m);
    }
  }
  return s;
}

namespace {

Rational q(long p, long d = 1) { return frac(p, d); }

DivisorClassSmall m3(long l, long irr, long d1) {
  return DivisorClassSmall(SmallSpace::M3, {q(l), q(irr), q(d1)});
}

DivisorClassSmall m2(long l, long irr, long d1) {
  return DivisorClassSmall(SmallSpace::M2, {q(l), q(irr), q(d1)});
}

DivisorClassSmall m21(Rational l, Rational psi, Rational irr, Rational d1) {
  return DivisorClassSmall(SmallSpace::M21, {l, psi, irr, d1});
}

}  // namespace

ClassTable tabulated_classes(SmallSpace space, const std::string& family) {
  ClassTable t;
  t.space = space;
  t.family = family;
  if (space == SmallSpace::M3 && family == "coble-quartic") {
    t.entries = {{1, m3(4, -1, 0)},
                 {2, m3(27, -8, -3)},
                 {3, m3(108, -37, -16)},
                 {4, m3(329, -128, -64)},
                 {5, m3(840, -366, -192)},
                 {6, m3(1890, -912, -502)},
                 {7, m3(3864, -2046, -1152)},
                 {8, m3(7326, -4224, -2438)},
                 {9, m3(13068, -8151, -4752)}};
  } else if (space == SmallSpace::M2 && family == "coble-cubic") {
    t.entries = {{1, m2(9, -2, 0)},
                 {2, m2(0, -11, 9)},
                 {3, m2(332, -94, -34)},
                 {4, m2(1152, -361, -153)},
                 {5, m2(3330, -964, -738)}};
  } else if (space == SmallSpace::M21 && family == "two-quadrics") {
    t.entries = {{1, m21(q(9, 2), 3, q(-5, 4), q(-3, 2))},
                 {2, m21(19, 19, -7, -8)},
                 {3, m21(q(99, 2), 66, q(-91, 4), q(-51, 2))},
                 {4, m21(102, 170, q(-281, 5), q(-312, 5))},
                 {5, m21(q(365, 2), 365, q(-469, 4), q(-259, 2))},
                 {6, m21(297, 693, -218, -240)},
                 {7, m21(q(903, 2), 1204, q(-1491, 4), q(-819, 2))}};
  } else {
    throw Error("tabulated_classes: no table for (" + to_string(space) + ", " + family + ")");
  }
  return t;
}

ClassTable tabulated_classes(const std::string& family) {
  if (family == "coble-quartic") return tabulated_classes(SmallSpace::M3, family);
  if (family == "coble-cubic") return tabulated_classes(SmallSpace::M2, family);
  if (family == "two-quadrics") return tabulated_classes(SmallSpace::M21, family);
  throw Error("tabulated_classes: unknown family '" + family + "'");
}

}  // namespace cblab
