#include "cblab/scaling.hpp"

#include "cblab/chern.hpp"

#include <algorithm>
#include <tuple>

namespace cblab {

ScalingReport classify(const std::vector<BigInt>& f) {
  const int M = static_cast<int>(f.size()) - 1;
  if (M < 2) throw Error("classify: inconclusive, need at least 3 samples");
  std::vector<std::vector<BigInt>> diff{f};
  int d = -1;
  for (int order = 0; order <= M - 2; ++order) {
    // diff[order + 1] from diff[order]
    const auto& prev = diff.back();
    std::vector<BigInt> next;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    diff.push_back(next);
    if (std::all_of(next.begin(), next.end(), [](const BigInt& v) { return v == 0; })) {
      d = order;
      break;
    }
  }
  if (d < 0) {
    throw Error("classify: inconclusive, samples fit no polynomial of degree <= " +
                std::to_string(M - 2));
  }
  ScalingReport rep;
  rep.d = d;
  rep.D = diff[d][0];
  rep.Delta = BigInt(d) + rep.D - f[1];
  rep.samples = M + 1;
  if (rep.Delta != 0) {
    rep.candidates = {"not minimal degree"};
  } else if (rep.D == 1) {
    rep.candidates = {"projective"};
  } else if (rep.D == 2) {
    rep.candidates = {"quadric"};
  } else if (d == 1) {
    rep.candidates = {"rational normal curve of degree " + rep.D.get_str()};
  } else if (d == 2 && rep.D == 4) {
    // (m+1)(2m+1): the Hilbert function does not separate these.
    rep.candidates = {"veronese surface", "cone over quartic rational normal curve",
                      "scroll S(1,3)"};
  } else if (d == 0) {
    rep.candidates = {"zero-dimensional"};
  } else {
    rep.candidates = {"scroll S(a_1..a_" + std::to_string(d) + "), sum a = " + rep.D.get_str()};
  }
  return rep;
}

ScalingReport classify_spec(const BundleSpec& spec, RankSequence& seq, int max_m) {
  if (max_m < 3) throw Error("classify_spec: max M must be >= 3");
  seq = rank_sequence(spec, 3);
  for (int m = 3;; ++m) {
    if (m > 3) extend_rank_sequence(seq, m);
    try {
      auto rep = classify(seq.values);
      if (m >= rep.d + 3 || m >= max_m) return rep;
    } catch (const Error&) {
      if (m >= max_m) throw;
    }
  }
}

namespace {

Rational C(long n, long k) { return Rational(binom(n, k)); }

std::vector<int> range1(int D) {
  std::vector<int> b;
  for (int j = 1; j <= D; ++j) b.push_back(j);
  return b;
}

}  // namespace

IdentityCoefficients identity_coeffs_general(int R, int D) {
  if (R < 1 || D < 1) throw Error("identity_coeffs_general: need R >= 1, D >= 1");
  // c1(V[m]) = A(m) c1(V) + sum_{i=2}^{D} w_i(m) c1(W_i).
  auto A = [R, D](long m) -> Rational {
    Rational a = C(m + R - 1, R);
    for (long i = 2; i <= D; ++i) {
      const long sign = (i - 1) % 2 == 0 ? 1 : -1;
      a += Rational(sign * (i - 1)) * C(D, i) * C(m - i + R - 1, R);
    }
    return a;
  };
  auto w = [R](long i, long m) -> Rational {
    const long sign = i % 2 == 0 ? 1 : -1;
    return Rational(sign) * C(m - i + R - 1, R - 1);
  };
  // c1(W_j) as a vector over c1(V[1..D]); at m = j only W_2..W_j appear and
  // W_j has coefficient (-1)^j.
  std::vector<std::vector<Rational>> W(D + 1, std::vector<Rational>(D, 0));
  for (int j = 2; j <= D; ++j) {
    std::vector<Rational> v(D, 0);
    v[j - 1] += 1;
    v[0] -= A(j);
    for (int i = 2; i < j; ++i) {
      for (int t = 0; t < D; ++t) v[t] -= w(i, j) * W[i][t];
    }
    const Rational lead = w(j, j);
    for (auto& x : v) x /= lead;
    W[j] = std::move(v);
  }
  IdentityCoefficients out;
  out.kind = "general(R=" + std::to_string(R) + ",D=" + std::to_string(D) + ")";
  out.basis = range1(D);
  out.beta = [A, w, W, D](int m) {
    std::vector<Rational> beta(D, 0);
    beta[0] = A(m);
    for (int i = 2; i <= D; ++i) {
      const Rational c = w(i, m);
      if (c == 0) continue;
      for (int t = 0; t < D; ++t) beta[t] += c * W[i][t];
    }
    return beta;
  };
  return out;
}

IdentityCoefficients identity_coeffs_closed(const std::string& kind, int d) {
  IdentityCoefficients out;
  out.kind = kind;
  if (kind == "quadric") {
    if (d < 1) throw Error("identity_coeffs_closed: quadric needs d >= 1");
    out.kind = "quadric(d=" + std::to_string(d) + ")";
    out.basis = {1, 2};
    out.beta = [d](int m) {
      const long M = m;
      return std::vector<Rational>{
          C(M + d + 1, d + 2) - C(M - 2 + d + 1, d + 2) - Rational(d + 3) * C(M - 2 + d + 1, d + 1),
          C(M - 2 + d + 1, d + 1)};
    };
  } else if (kind == "veronese") {
    out.basis = {1, 2, 3, 4};
    out.beta = [](int m) {
      const long M = m;
      return std::vector<Rational>{
          -7 * C(M + 3, 5) + 20 * C(M + 2, 5) - 23 * C(M + 1, 5) - 6 * C(M + 3, 6) +
              8 * C(M + 2, 6) - 3 * C(M + 1, 6) + C(M + 5, 6),
          C(M + 3, 5) - 6 * C(M + 2, 5) + 15 * C(M + 1, 5),
          C(M + 2, 5) - 6 * C(M + 1, 5),
          C(M + 1, 5)};
    };
  } else if (kind == "scroll12") {
    out.basis = {1, 2, 3};
    out.beta = [](int m) {
      const long M = m;
      return std::vector<Rational>{
          C(M + 4, 5) - 6 * C(M + 2, 4) + 12 * C(M + 1, 4) - 3 * C(M + 2, 5) + 2 * C(M + 1, 5),
          C(M + 2, 4) - 5 * C(M + 1, 4),
          C(M + 1, 4)};
    };
  } else if (kind == "p1o3") {
    out.basis = {1, 2, 3};
    out.beta = [](int m) {
      const long M = m;
      return std::vector<Rational>{
          C(M + 3, 4) - 5 * C(M + 1, 3) - 3 * C(M + 1, 4) + 8 * C(M, 3) + 2 * C(M, 4),
          C(M + 1, 3) - 4 * C(M, 3),
          C(M, 3)};
    };
  } else {
    throw Error("identity_coeffs_closed: unknown kind '" + kind + "'");
  }
  return out;
}

IdentityCoefficients identity_coeffs_conjectural(const std::string& kind) {
  IdentityCoefficients out;
  out.kind = kind;
  if (kind == "coble-quartic") {
    out.basis = {1, 4};
    out.anomaly_support = {"H", "delta_1"};
    out.beta = [](int m) {
      const long M = m;
      return std::vector<Rational>{
          C(7 + M, M - 1) - C(M + 3, 8) - 165 * C(M + 3, 7), C(M + 3, 7)};
    };
  } else if (kind == "coble-cubic") {
    out.basis = {1, 3};
    out.anomaly_support = {"delta_1"};
    out.beta = [](int m) {
      const long M = m;
      return std::vector<Rational>{C(M + 8, 9) + C(M + 5, 9) - 55 * C(M + 5, 8), C(M + 5, 8)};
    };
  } else if (kind == "two-quadrics") {
    out.basis = {1, 2, 4};
    out.beta = [](int m) {
      const BigInt M = m;
      return std::vector<Rational>{
          frac((M - 4) * (M - 2) * M * (M + 1) * (7 * M - 5), 12),
          C(m + 3, 5) - 21 * C(m + 1, 5), C(m + 1, 5)};
    };
  } else {
    throw Error("identity_coeffs_conjectural: unknown kind '" + kind + "'");
  }
  return out;
}

IdentityCoefficients identity_coeffs(const std::string& kind, int d) {
  if (kind == "quadric" || kind == "veronese" || kind == "scroll12" || kind == "p1o3") {
    return identity_coeffs_closed(kind, d);
  }
  return identity_coeffs_conjectural(kind);
}

namespace {

template <class Class>
Class residual(const std::function<Class(int)>& classes, const IdentityCoefficients& coeffs,
               int m) {
  if (m < 1) throw Error("verify_identity: m must be >= 1");
  const auto beta = coeffs.beta(m);
  Class acc = classes(m) * Rational(-1);
  for (std::size_t j = 0; j < coeffs.basis.size(); ++j) {
    if (beta[j] != 0) acc = acc + classes(coeffs.basis[j]) * beta[j];
  }
  return acc;
}

}  // namespace

DivisorClassM0n verify_identity(const std::function<DivisorClassM0n(int)>& classes,
                                const IdentityCoefficients& coeffs, int m) {
  return residual(classes, coeffs, m);
}

DivisorClassSmall verify_identity(const std::function<DivisorClassSmall(int)>& classes,
                                  const IdentityCoefficients& coeffs, int m) {
  return residual(classes, coeffs, m).normalized();
}

Rational verify_identity(const std::function<Rational(int)>& degrees,
                         const IdentityCoefficients& coeffs, int m) {
  if (m < 1) throw Error("verify_identity: m must be >= 1");
  const auto beta = coeffs.beta(m);
  Rational acc = -degrees(m);
  for (std::size_t j = 0; j < coeffs.basis.size(); ++j) {
    if (beta[j] != 0) acc += beta[j] * degrees(coeffs.basis[j]);
  }
  return acc;
}

AnomalyM2 anomaly_m2_level1(int m) {
  if (m < 1) throw Error("anomaly_m2_level1: m must be >= 1");
  const Rational scale = C(m + 3, 4);
  AnomalyM2 a;
  a.pigtail = scale * Rational(pigtail_pairing_m2(1)) - Rational(pigtail_pairing_m2(m));
  a.elliptic = scale * elliptic_pairing_m2(1) - elliptic_pairing_m2(m);
  std::tie(a.alpha, a.beta) = m2_solve(a.pigtail, a.elliptic);
  return a;
}

Rational twisted_degree(int d, int k, int m) {
  const BigInt M = m;
  return -frac(M * (d * M + 1) * (k + d), 12);
}

}  // namespace cblab
