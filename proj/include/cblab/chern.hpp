#pragma once

// First Chern classes: degrees on M_{0,4}, F-curve pairings on M_{0,n},
// genus-one degrees, and the tabulated classes on M_2, M_3, M_{2,1}.

#include <map>
#include <string>
#include <vector>

#include "cblab/picard.hpp"
#include "cblab/rational.hpp"
#include "cblab/weights.hpp"

namespace cblab {

/// Degree of V(sl_{r+1}, {w1..w4}, l) on M_{0,4}:
/// [rk * sum c(w_i) - sum_mu c(mu) (three channel products)] / (2 (l + r + 1)).
/// Throws Error if the result is not an integer.
BigInt deg_m04(const std::vector<Weight>& weights, int level);
BigInt deg_m04(const BundleSpec& spec);

/// c1(V) . F for every F-curve of fcurves(n); genus 0, n >= 5.
DivisorClassM0n c1_fvector(const BundleSpec& spec);

/// Degree and rank of V(sl_2, mu w1, m) on M_{1,1} (0 for odd mu).
Rational c1_genus1(int mu, int m);
BigInt r_genus1(int mu, int m);

/// sum_mu r^(m)_mu c^(m)_{mu*}: c1(V(sl_2, m)) on the elliptic F-curve of M_2.
Rational elliptic_pairing_m2(int m);
/// sum_{0 <= a, b <= m} deg V(sl_2, {a, a, b, b}, m): the pigtail F-curve of M_2.
BigInt pigtail_pairing_m2(int m);

/// Tabulated classes c1(V[m]) for one family.
struct ClassTable {
  SmallSpace space = SmallSpace::M2;
  std::string family;
  std::map<int, DivisorClassSmall> entries;
};

/// family: "coble-quartic" (M3), "coble-cubic" (M2), "two-quadrics" (M21).
ClassTable tabulated_classes(SmallSpace space, const std::string& family);
/// Looks the space up from the family name.
ClassTable tabulated_classes(const std::string& family);

}  // namespace cblab
