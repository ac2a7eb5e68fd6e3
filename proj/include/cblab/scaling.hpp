#pragma once

// Rank-scaling classification and first Chern class scaling identities.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cblab/picard.hpp"
#include "cblab/rational.hpp"
#include "cblab/ranks.hpp"

namespace cblab {

/// Invariants of the polynomial interpolating f(0..M).
struct ScalingReport {
  int d = 0;                 // degree of the interpolating polynomial
  BigInt D = 0;              // d! * leading coefficient
  BigInt Delta = 0;          // d + D - f(1)
  std::vector<std::string> candidates;
  int samples = 0;
};

/// Smallest d with vanishing (d+1)-th differences over all samples; needs
/// d <= M - 2, otherwise throws Error("inconclusive ...").
ScalingReport classify(const std::vector<BigInt>& f);

/// Grows the rank sequence of `spec` from M = 3 until classify succeeds
/// with M >= d + 3, or M reaches max_m. The sequence used is left in `seq`.
ScalingReport classify_spec(const BundleSpec& spec, RankSequence& seq, int max_m = 8);

/// c1(V[m]) = sum_j beta_j(m) c1(V[basis_j]) (+ anomaly).
struct IdentityCoefficients {
  std::string kind;
  std::vector<int> basis;  // multiples m the identity is written in
  std::function<std::vector<Rational>(int)> beta;
  std::vector<std::string> anomaly_support;  // empty: none asserted
};

/// Triangular elimination of the auxiliary classes from the rank-R,
/// degree-D resolution formula.
IdentityCoefficients identity_coeffs_general(int R, int D);

/// kind: "quadric" (uses d), "veronese", "scroll12", "p1o3".
IdentityCoefficients identity_coeffs_closed(const std::string& kind, int d = 0);

/// kind: "coble-quartic", "coble-cubic", "two-quadrics".
IdentityCoefficients identity_coeffs_conjectural(const std::string& kind);

/// Dispatches on any of the names above; "auto" is not accepted here.
IdentityCoefficients identity_coeffs(const std::string& kind, int d = 0);

/// residual = sum_j beta_j(m) c1(V[basis_j]) - c1(V[m]); classes(j) returns
/// c1(V[j]). Zero residual means the identity holds.
DivisorClassM0n verify_identity(const std::function<DivisorClassM0n(int)>& classes,
                                const IdentityCoefficients& coeffs, int m);
DivisorClassSmall verify_identity(const std::function<DivisorClassSmall(int)>& classes,
                                  const IdentityCoefficients& coeffs, int m);
Rational verify_identity(const std::function<Rational(int)>& degrees,
                         const IdentityCoefficients& coeffs, int m);

struct AnomalyM2 {
  Rational pigtail;   // C(m+3,4) p(1) - p(m)
  Rational elliptic;  // C(m+3,4) e(1) - e(m)
  Rational alpha;     // Delta_0 coefficient
  Rational beta;      // Delta_{1,empty} coefficient
};

/// Anomaly of the projective identity for V(sl_2, 1) on M_2 at multiple m.
AnomalyM2 anomaly_m2_level1(int m);

/// deg V(sl_2, {2k w1}, d + 2k)[m] on M_{1,1}: -m (dm+1)(k+d)/12.
Rational twisted_degree(int d, int k, int m);

}  // namespace cblab
