#pragma once

// Dominant integral weights of sl(r+1), stored in partition normal form.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cblab/rational.hpp"

namespace cblab {

/// A dominant integral weight of sl(r+1) as a partition with exactly r+1
/// parts whose last part is 0. Fundamental coordinates are
/// c_j = parts[j-1] - parts[j].
class Weight {
 public:
  Weight() = default;
  /// Throws Error unless `parts` has r+1 non-increasing entries ending in 0.
  Weight(int r, std::vector<int> parts);

  static Weight zero(int r);
  /// sum_j coords[j-1] * omega_j, with r = coords.size().
  static Weight from_fundamental(std::span<const int> coords);
  /// mult * omega_j; j = 0 or j = r+1 give the zero weight.
  static Weight omega(int r, int j, int mult = 1);

  int r() const { return r_; }
  const std::vector<int>& parts() const { return parts_; }
  int part(std::size_t i) const { return parts_[i]; }
  /// |lambda| = sum of parts.
  int size() const;
  /// (lambda, theta) in partition form: the first part.
  int level_needed() const { return parts_.empty() ? 0 : parts_.front(); }
  bool is_zero() const { return level_needed() == 0; }
  std::vector<int> fundamental_coords() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

 private:
  int r_ = 0;
  std::vector<int> parts_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

std::string to_string(const Weight& w);

/// A weight together with the level it is read at; parts[0] <= level.
struct LevelWeight {
  Weight weight;
  int level = 0;

  LevelWeight() = default;
  LevelWeight(Weight w, int l);
  bool operator==(const LevelWeight&) const = default;
};

/// Lie data of a conformal-blocks bundle V(sl_{r+1}, weights, level) on
/// M_{g,n}, n = weights.size().
struct BundleSpec {
  int r = 1;
  int level = 1;
  int genus = 0;
  std::vector<Weight> weights;

  int n() const { return static_cast<int>(weights.size()); }
  /// Checks shared r, parts[0] <= level, genus >= 0, r >= 1, level >= 0.
  void validate() const;
  /// Additionally requires 2g - 2 + n > 0 (a stable moduli space).
  void validate_moduli() const;
  bool operator==(const BundleSpec&) const = default;
};

/// P_level(sl_{r+1}): C(level + r, r) weights, ordered by |lambda| and then
/// lexicographically on parts.
std::vector<LevelWeight> enumerate_level_weights(int r, int level);
/// Same set as plain weights; cached and shared across threads.
const std::vector<Weight>& level_weight_set(int r, int level);

/// Highest weight of the dual representation.
Weight dual(const Weight& w);
/// Multiplies every fundamental coordinate by m.
Weight scale(const Weight& w, int m);
/// V[m]: weights and level scaled by m (m >= 0; m = 0 gives the trivial
/// bundle data at level 0).
BundleSpec scale_bundle(const BundleSpec& spec, int m);

/// Cyclic rotation of the affine Dynkin diagram applied j times,
/// 0 <= j <= r. One step on partitions prepends the level to parts[0..r-1]
/// and subtracts the new last part from every entry.
LevelWeight pluss(const LevelWeight& w, int j);

/// (lambda, lambda + 2 rho) with (theta, theta) = 2:
/// sum_i p_i (p_i + r + 2 - 2i) - |lambda|^2 / (r+1), i 1-based.
Rational casimir(const Weight& w);

}  // namespace cblab
