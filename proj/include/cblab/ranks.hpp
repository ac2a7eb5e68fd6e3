#pragma once

// Ranks of conformal-blocks bundles through factorization.

#include <string>
#include <vector>

#include "cblab/rational.hpp"
#include "cblab/weights.hpp"

namespace cblab {

enum class TreeShape { caterpillar, balanced };

/// Genus-0 rank of V(sl_{r+1}, weights, level) for any number of points
/// (n = 0, 1, 2 are the degenerate base cases).
BigInt rank_genus0(const std::vector<Weight>& weights, int level,
                   TreeShape shape = TreeShape::caterpillar);

/// Genus-g rank with weights on the marked points.
BigInt rank(int genus, const std::vector<Weight>& weights, int level,
            TreeShape shape = TreeShape::caterpillar);
BigInt rank(const BundleSpec& spec, TreeShape shape = TreeShape::caterpillar);

/// Map mu -> rank of V(weights + {mu}) at genus 0 for every mu in P_l with a
/// nonzero value.
std::vector<std::pair<Weight, BigInt>> rank_vector_genus0(const std::vector<Weight>& weights,
                                                          int level);

struct RankSequence {
  BundleSpec spec;
  std::vector<BigInt> values;  // f(0..M)
};

RankSequence rank_sequence(const BundleSpec& spec, int max_m);
/// Appends f(M+1..new_max) to an existing sequence.
void extend_rank_sequence(RankSequence& seq, int new_max);

/// A boundary divisor of M_{g,n}: either the irreducible one or the
/// separating Delta_{g1,J}; J holds 1-based marked-point labels.
struct BoundaryStratum {
  enum class Kind { separating, irreducible };
  Kind kind = Kind::separating;
  int g1 = 0;
  std::vector<int> J;

  static BoundaryStratum irreducible() { return {Kind::irreducible, 0, {}}; }
  static BoundaryStratum separating(int g1, std::vector<int> J);
  bool operator==(const BoundaryStratum&) const = default;
};

std::string to_string(const BoundaryStratum& s);

/// Throws Error unless the stratum exists on M_{g,n}.
void validate_stratum(const BoundaryStratum& s, int genus, int n);

/// One representative per boundary divisor of M_{g,n}, with (g1, J) and
/// (g - g1, J^c) identified.
std::vector<BoundaryStratum> boundary_strata(int genus, int n);

struct RestrictionEntry {
  LevelWeight mu;
  BigInt rank1;
  BigInt rank2;
};

/// Weights mu at the node with both factor ranks nonzero. For the
/// irreducible divisor rank2 is 1.
std::vector<RestrictionEntry> restriction_data(const BundleSpec& spec,
                                               const BoundaryStratum& stratum);

/// Drops every rank memo (fusion memo is separate).
void clear_rank_cache();

}  // namespace cblab
