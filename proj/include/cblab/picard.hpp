#pragma once

// Divisor classes: F-curve pairing vectors on M_{0,n} and fixed bases on
// M_{1,1}, M_2, M_3, M_{2,1}.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cblab/rational.hpp"

namespace cblab {

/// A set partition of {1..n} into four nonempty blocks. Blocks are sorted
/// and ordered by their smallest element.
struct FCurve {
  std::array<std::vector<int>, 4> blocks;
  bool operator==(const FCurve&) const = default;
};

std::string to_string(const FCurve& f);

/// All F-curves on M_{0,n} in a fixed order (restricted-growth order).
std::vector<FCurve> fcurves(int n);

/// delta_I . F: 1 if I or I^c is a union of two blocks, -1 if I or I^c is a
/// single block with at least two points, 0 otherwise.
int pair_boundary_fcurve(const std::vector<int>& I, const FCurve& f, int n);

/// A divisor class on M_{0,n} given by its pairing with every F-curve of
/// fcurves(n), in that order.
struct DivisorClassM0n {
  int n = 0;
  std::vector<Rational> values;

  DivisorClassM0n operator+(const DivisorClassM0n& o) const;
  DivisorClassM0n operator-(const DivisorClassM0n& o) const;
  DivisorClassM0n operator*(const Rational& c) const;
  bool operator==(const DivisorClassM0n&) const = default;
  bool is_zero() const;
};

/// F-pairing vector of the boundary divisor delta_I.
DivisorClassM0n boundary_class(const std::vector<int>& I, int n);

/// The nonadjacent basis of Pic(M_{0,5}) (x) Q, in this order.
const std::array<std::vector<int>, 5>& nonadjacent_basis_n5();

/// Coordinates in {d13, d14, d24, d25, d35}; throws if the 10 pairings are
/// not those of any class.
std::array<Rational, 5> to_nonadjacent_basis_n5(const DivisorClassM0n& c);
DivisorClassM0n from_nonadjacent_basis_n5(const std::array<Rational, 5>& x);

/// Solves [[-2, 1], [1, -1/12]] (a, b) = (pigtail, elliptic): the pairings of
/// Delta_0 and Delta_{1,empty} with the two F-curves of M_2.
std::pair<Rational, Rational> m2_solve(const Rational& pigtail, const Rational& elliptic);

enum class SmallSpace { M11, M2, M3, M21 };

std::string to_string(SmallSpace s);
SmallSpace parse_small_space(const std::string& s);

/// Generator names per space: M11 {deg}; M2 and M3 {lambda, delta_irr,
/// delta_1}; M21 {lambda, psi_1, delta_irr, delta_1}.
const std::vector<std::string>& generator_names(SmallSpace s);

struct DivisorClassSmall {
  SmallSpace space = SmallSpace::M11;
  std::vector<Rational> coords;

  DivisorClassSmall() = default;
  DivisorClassSmall(SmallSpace s, std::vector<Rational> c);

  /// On M2 and M21, rewrites lambda as delta_irr/10 + delta_1/5.
  DivisorClassSmall normalized() const;
  bool equivalent(const DivisorClassSmall& o) const;
  bool is_zero() const;

  DivisorClassSmall operator+(const DivisorClassSmall& o) const;
  DivisorClassSmall operator-(const DivisorClassSmall& o) const;
  DivisorClassSmall operator*(const Rational& c) const;
  bool operator==(const DivisorClassSmall&) const = default;
};

std::string to_string(const DivisorClassSmall& c);

/// Hyperelliptic class 9 lambda - delta_irr - 3 delta_1 on M3.
DivisorClassSmall hyperelliptic_m3();
/// Writes an M3 class as a H + b delta_1 when possible.
std::optional<std::pair<Rational, Rational>> split_h_delta1(const DivisorClassSmall& c);

}  // namespace cblab
