#pragma once

// JSON encodings. Rationals and big integers travel as decimal strings.

#include <json.hpp>

#include "cblab/hypotheses.hpp"
#include "cblab/picard.hpp"
#include "cblab/ranks.hpp"
#include "cblab/scaling.hpp"
#include "cblab/weights.hpp"

namespace cblab {

using Json = nlohmann::json;

Json to_json(const Weight& w);
/// Partition form [p_0, .., p_r] or {"fundamental": [c_1, .., c_r]}.
Weight weight_from_json(const Json& j, int r);

/// {"r", "level", "genus", "n", "weights": [[...], ...]}; "n" is optional
/// on input but must match when present.
Json to_json(const BundleSpec& s);
BundleSpec bundle_spec_from_json(const Json& j);

Json to_json(const Rational& q);
Json to_json(const BigInt& z);
/// Accepts a string "p/q" or a JSON integer.
Rational rational_from_json(const Json& j);

Json to_json(const ScalingReport& r);
Json to_json(const RankSequence& s);
Json to_json(const BoundaryStratum& s);
Json to_json(const RestrictionEntry& e);

/// [{"blocks": [[..], ..], "value": "p/q"}, ...]
Json to_json(const DivisorClassM0n& c);
DivisorClassM0n m0n_class_from_json(const Json& j);

/// {"space": "M3", "coords": {"lambda": "..", ...}}
Json to_json(const DivisorClassSmall& c);
DivisorClassSmall small_class_from_json(const Json& j);

Json to_json(const SocleReport& s);
Json to_json(const StratumReport& s);
Json to_json(const HypothesisReport& r);

}  // namespace cblab
