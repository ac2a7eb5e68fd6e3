#pragma once

// Reproduction cases for the tabulated values and worked examples, plus the
// bundle families they are built on.

#include <functional>
#include <string>
#include <vector>

#include "cblab/json_io.hpp"
#include "cblab/weights.hpp"

namespace cblab {

/// sl2 weight list mult_i * omega_1.
std::vector<Weight> sl2_weights(const std::vector<int>& mults);

/// V(sl2, {2w,2w,2w,2w,4w}, 5) on M_{0,5}: S(1,2) scroll scaling.
BundleSpec family_scroll_m05();
/// V(sl2, {w,3w,4w,4w,6w}, 8) on M_{0,5}: Veronese surface scaling.
BundleSpec family_veronese_m05();
/// V(sl4, {w1+3w2+w3, 3w1+w2+w3, 2w1+w2+2w3, 7w1, 7w3}, 7) on M_{0,5}:
/// quadric threefold scaling.
BundleSpec family_quadric_m05();
/// V(sl_{r+1}, {(w_i + w_{r+1-i})^4}, 2) on M_{0,4}; projective scaling with
/// d = 2i when 4i <= r+1.
BundleSpec family_projective_m04(int r, int i);
/// The five-point member of the same family:
/// {(w_i + w_{r+1-i})^3, w_{i-1} + w_{r-i}, 2 w_1} at level 2.
BundleSpec family_projective_m05(int r, int i);
/// On M_{1,n}: {2k w1, ((2k+1) w1)^{n-1}} for odd n, {w1, ((2k+1) w1)^{n-1}}
/// for even n, level 2k+1. Ranks of multiples are m+1.
BundleSpec family_genus_one(int k, int n);
/// V(sl2, {}, 1) on M_2.
BundleSpec family_level_one_m2();

struct ReproCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct ReproResult {
  std::string id;
  std::string description;
  std::string provenance;
  std::vector<ReproCheck> checks;
  std::vector<std::string> notes;  // informational only
  // The case exhibits an identity that fails (and the failure itself is the
  // tabulated outcome).
  bool counterexample = false;
  std::string counterexample_detail;
  double seconds = 0;

  bool reproduced() const;
};

struct ReproCase {
  std::string id;
  std::string description;
  std::string provenance;
  std::function<void(ReproResult&)> run;
};

/// All cases, in their fixed reporting order.
const std::vector<ReproCase>& repro_cases();

/// Throws Error on an unknown id.
ReproResult run_repro_case(const std::string& id);
/// "all" expands to every case. Cases may run concurrently (see set_jobs);
/// results come back in the order of `ids`.
std::vector<ReproResult> run_repro_cases(const std::vector<std::string>& ids);

/// 0 when every check reproduced and no counterexample was exhibited, else 1.
int repro_exit_code(const std::vector<ReproResult>& results);

Json to_json(const ReproCheck& c);
Json to_json(const ReproResult& r);

}  // namespace cblab
