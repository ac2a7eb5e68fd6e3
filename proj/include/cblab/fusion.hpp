#pragma once

// Genus-0 three-point fusion coefficients for sl(r+1) at level l, read off
// the small quantum cohomology of Gr(r+1, r+1+l).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cblab/rational.hpp"
#include "cblab/weights.hpp"

namespace cblab {

/// Partition padded with zeros to a fixed number of rows.
using Partition = std::vector<int>;

/// c_{a,b}^rho for every rho with at most `rows` rows. Enumerates LR skew
/// tableaux through their row/letter count matrices.
std::map<Partition, std::int64_t> lr_expand(const Partition& a, const Partition& b, int rows);

/// c_{a,b}^c. Trailing zeros are ignored; 0 when |c| != |a| + |b|.
std::int64_t lr_coefficient(const Partition& a, const Partition& b, const Partition& c);

/// Result of stripping (r+1+l)-border strips from a partition with at most
/// r+1 rows.
struct RimHookReduction {
  bool vanishes = false;
  Partition nu;  // r+1 entries, inside the (r+1) x l box
  int degree = 0;
  int sign = 1;
};
RimHookReduction rim_hook_reduce(const Partition& p, int r, int level);

/// sigma_lambda * sigma_mu in QH*(Gr(r+1, r+1+l)); keys are (nu, q-degree).
struct QuantumProduct {
  int r = 1;
  int level = 0;
  std::map<std::pair<Partition, int>, std::int64_t> terms;
};
QuantumProduct quantum_product(const Partition& a, const Partition& b, int r, int level);

/// Quantum multiplication by the full-row class sigma_(l) is a monomial map:
/// (l, p_1..p_r) when the last part is 0, otherwise q * (p_i - 1).
/// Returns the new class and the q-degree gained (0 or 1).
std::pair<Partition, int> times_full_row(const Partition& p, int level);

/// Nonzero N(a, b, nu) for nu in P_l, sorted by nu.
struct FusionRow {
  std::vector<std::pair<Weight, std::int64_t>> entries;
  std::int64_t at(const Weight& nu) const;
};

/// Memo for pair products (in memory) and for three-point coefficients
/// (persistable as JSON lines). Safe for concurrent use.
class FusionCache {
 public:
  static FusionCache& global();

  std::optional<std::int64_t> lookup(int level, const Weight& a, const Weight& b,
                                     const Weight& c) const;
  void insert(int level, const Weight& a, const Weight& b, const Weight& c, std::int64_t n);

  /// Reads records {"r","l","a","b","c","N"}; duplicates must agree.
  /// Returns the number of records read.
  std::size_t load(const std::string& path);
  void save(const std::string& path) const;
  std::size_t size() const;
  std::size_t pair_count() const;
  void clear();

  std::shared_ptr<const FusionRow> pair(int level, const Weight& a, const Weight& b);

 private:
  struct TripleKey {
    int r;
    int level;
    Weight a, b, c;
    bool operator==(const TripleKey&) const = default;
  };
  struct PairKey {
    int level;
    Weight a, b;
    bool operator==(const PairKey&) const = default;
  };
  struct TripleHash {
    std::size_t operator()(const TripleKey& k) const noexcept;
  };
  struct PairHash {
    std::size_t operator()(const PairKey& k) const noexcept;
  };
  static TripleKey canonical(int level, const Weight& a, const Weight& b, const Weight& c);

  mutable std::shared_mutex mu_;
  std::unordered_map<TripleKey, std::int64_t, TripleHash> triples_;
  std::unordered_map<PairKey, std::shared_ptr<const FusionRow>, PairHash> pairs_;
};

/// N(a, b, nu) for all nu in P_l: one classical LR expansion of a*b, rim-hook
/// reduction, then the full-row shifts that realize sigma_(l)^s.
FusionRow compute_fusion_row(const Weight& a, const Weight& b, int level);

/// Cached pair product.
std::shared_ptr<const FusionRow> fusion_product(const Weight& a, const Weight& b, int level);

/// Rank of V(sl_{r+1}, {a, b, c}, l) on M_{0,3}.
std::int64_t fuse3(const Weight& a, const Weight& b, const Weight& c, int level);
std::int64_t fuse3(const LevelWeight& a, const LevelWeight& b, const LevelWeight& c);

/// Closed-form sl2 rule; independent of the quantum engine.
int fuse3_sl2_oracle(int a, int b, int c, int level);

/// Genus-0 rank straight from the n-point dictionary: coefficient of
/// q^s [pt] in sigma_1 * ... * sigma_n * sigma_(l)^s, or the classical
/// invariant count when s < 0. Shares only the LR layer with fuse3.
BigInt rank_dictionary(const std::vector<Weight>& weights, int level);

}  // namespace cblab
