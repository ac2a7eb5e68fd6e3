#pragma once

// Checks of the four boundary conditions (Delta-invariant zero scaling,
// free restriction data, quasi rank one factorization, socle scaling).

#include <optional>
#include <string>
#include <vector>

#include "cblab/ranks.hpp"
#include "cblab/scaling.hpp"

namespace cblab {

/// True iff no nonzero (a_i) has sum a_i alpha_i = 0 and sum a_i = 0
/// (affine independence in fundamental coordinates).
bool is_free(const std::vector<LevelWeight>& data);

/// At most one entry with rank1 * rank2 > 1.
bool is_quasi_rank_one(const std::vector<RestrictionEntry>& data);

struct SocleReport {
  Weight mu;
  BigInt product;                 // rank1 * rank2 at m = 1
  std::vector<BigInt> sequence;   // product rank sequence m = 0..M
  std::optional<ScalingReport> report;  // empty when classification was inconclusive
  bool pass = false;
  std::string reason;
};

/// Socle of a quasi-rank-one stratum, or nullopt when every product is 1
/// (vacuous pass). Passes iff the product sequence has Delta = 0 and the
/// parent's degree D.
std::optional<SocleReport> socle_check(const BundleSpec& spec, const BoundaryStratum& stratum,
                                       const std::vector<RestrictionEntry>& data,
                                       const ScalingReport& parent, int max_m);

struct StratumReport {
  BoundaryStratum stratum;
  std::vector<RestrictionEntry> data;
  BigInt product_sum = 0;
  bool conserved = false;  // product_sum == rank
  bool free = false;
  bool quasi_rank_one = false;
  std::optional<SocleReport> socle;
  bool pass = false;
  std::string failure;  // first failing condition, empty on pass
};

struct HypothesisReport {
  BundleSpec spec;
  BigInt rank = 0;
  std::vector<BigInt> rank_sequence;
  std::optional<ScalingReport> parent;
  bool delta_zero = false;
  std::vector<StratumReport> strata;
  bool pass = false;
  std::string failure;
};

/// Runs every check on every boundary divisor (genus <= 2). Rank sequences
/// use at most max_m multiples.
HypothesisReport check_boundary_hypotheses(const BundleSpec& spec, int max_m = 8);

}  // namespace cblab
