#include "cblab/json_io.hpp"

namespace cblab {

Json to_json(const Weight& w) { return Json(w.parts()); }

Weight weight_from_json(const Json& j, int r) {
  if (j.is_object() && j.contains("fundamental")) {
    std::vector<int> coords;
    for (const auto& v : j.at("fundamental")) {
      if (!v.is_number_integer()) throw Error("fundamental coordinates must be integers");
      coords.push_back(v.get<int>());
    }
    if (static_cast<int>(coords.size()) != r) throw Error("weight needs r fundamental coordinates");
    return Weight::from_fundamental(coords);
  }
  if (!j.is_array()) throw Error("weight must be a JSON array of r+1 integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error("weight entries must be integers");
    parts.push_back(v.get<int>());
  }
  return Weight(r, std::move(parts));
}

Json to_json(const BundleSpec& s) {
  Json ws = Json::array();
  for (const auto& w : s.weights) ws.push_back(to_json(w));
  return Json{{"r", s.r}, {"level", s.level}, {"genus", s.genus}, {"n", s.n()}, {"weights", ws}};
}

BundleSpec bundle_spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error("spec must be a JSON object");
  BundleSpec s;
  try {
    s.r = j.at("r").get<int>();
    s.level = j.at("level").get<int>();
    s.genus = j.value("genus", 0);
    for (const auto& w : j.at("weights")) s.weights.push_back(weight_from_json(w, s.r));
    if (j.contains("n") && j.at("n").get<int>() != s.n()) {
      throw Error("spec: n = " + std::to_string(j.at("n").get<int>()) + " but " +
                  std::to_string(s.n()) + " weights given");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed spec: ") + e.what());
  }
  s.validate();
  return s;
}

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const BigInt& z) { return to_string(z); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  throw Error("expected a rational as a string \"p/q\" or an integer");
}

Json to_json(const ScalingReport& r) {
  return Json{{"d", r.d},
              {"D", to_json(r.D)},
              {"Delta", to_json(r.Delta)},
              {"candidates", r.candidates},
              {"samples", r.samples}};
}

Json to_json(const RankSequence& s) {
  Json vals = Json::array();
  for (const auto& v : s.values) vals.push_back(to_json(v));
  return Json{{"spec", to_json(s.spec)}, {"values", vals}};
}

Json to_json(const BoundaryStratum& s) {
  if (s.kind == BoundaryStratum::Kind::irreducible) return Json{{"kind", "irreducible"}};
  return Json{{"kind", "separating"}, {"g1", s.g1}, {"J", s.J}};
}

Json to_json(const RestrictionEntry& e) {
  return Json{{"mu", to_json(e.mu.weight)}, {"rank1", to_json(e.rank1)}, {"rank2", to_json(e.rank2)}};
}

Json to_json(const DivisorClassM0n& c) {
  const auto curves = fcurves(c.n);
  Json out = Json::array();
  for (std::size_t i = 0; i < curves.size(); ++i) {
    Json blocks = Json::array();
    for (const auto& b : curves[i].blocks) blocks.push_back(b);
    out.push_back(Json{{"blocks", blocks}, {"value", to_json(c.values[i])}});
  }
  return out;
}

DivisorClassM0n m0n_class_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("F-vector must be a nonempty array");
  int n = 0;
  for (const auto& e : j) {
    for (const auto& b : e.at("blocks")) {
      for (const auto& p : b) n = std::max(n, p.get<int>());
    }
  }
  const auto curves = fcurves(n);
  DivisorClassM0n c{n, std::vector<Rational>(curves.size())};
  std::vector<char> seen(curves.size(), 0);
  for (const auto& e : j) {
    FCurve f;
    const auto& blocks = e.at("blocks");
    if (blocks.size() != 4) throw Error("F-curve must have four blocks");
    for (int b = 0; b < 4; ++b) {
      f.blocks[b] = blocks[b].get<std::vector<int>>();
      std::sort(f.blocks[b].begin(), f.blocks[b].end());
    }
    std::sort(f.blocks.begin(), f.blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    auto it = std::find(curves.begin(), curves.end(), f);
    if (it == curves.end()) throw Error("unknown F-curve " + to_string(f));
    const std::size_t idx = it - curves.begin();
    c.values[idx] = rational_from_json(e.at("value"));
    seen[idx] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error("F-vector does not list every F-curve of M_{0," + std::to_string(n) + "}");
  }
  return c;
}

Json to_json(const DivisorClassSmall& c) {
  Json coords = Json::object();
  const auto& names = generator_names(c.space);
  for (std::size_t i = 0; i < names.size(); ++i) coords[names[i]] = to_json(c.coords[i]);
  return Json{{"space", to_string(c.space)}, {"coords", coords}};
}

DivisorClassSmall small_class_from_json(const Json& j) {
  const SmallSpace space = parse_small_space(j.at("space").get<std::string>());
  const auto& names = generator_names(space);
  std::vector<Rational> coords(names.size(), 0);
  const auto& in = j.at("coords");
  for (auto it = in.begin(); it != in.end(); ++it) {
    auto pos = std::find(names.begin(), names.end(), it.key());
    if (pos == names.end()) throw Error("unknown generator '" + it.key() + "' on " + to_string(space));
    coords[pos - names.begin()] = rational_from_json(it.value());
  }
  return DivisorClassSmall(space, std::move(coords));
}

Json to_json(const SocleReport& s) {
  Json seq = Json::array();
  for (const auto& v : s.sequence) seq.push_back(to_json(v));
  Json j{{"mu", to_json(s.mu)}, {"product", to_json(s.product)}, {"sequence", seq},
         {"pass", s.pass}};
  if (s.report) j["report"] = to_json(*s.report);
  if (!s.reason.empty()) j["reason"] = s.reason;
  return j;
}

Json to_json(const StratumReport& s) {
  Json data = Json::array();
  for (const auto& e : s.data) data.push_back(to_json(e));
  Json j{{"stratum", to_json(s.stratum)},
         {"name", to_string(s.stratum)},
         {"restriction_data", data},
         {"product_sum", to_json(s.product_sum)},
         {"conserved", s.conserved},
         {"free", s.free},
         {"quasi_rank_one", s.quasi_rank_one},
         {"pass", s.pass}};
  j["socle"] = s.socle ? to_json(*s.socle) : Json(nullptr);
  if (!s.failure.empty()) j["failure"] = s.failure;
  return j;
}

Json to_json(const HypothesisReport& r) {
  Json seq = Json::array();
  for (const auto& v : r.rank_sequence) seq.push_back(to_json(v));
  Json strata = Json::array();
  for (const auto& s : r.strata) strata.push_back(to_json(s));
  Json j{{"spec", to_json(r.spec)},  {"rank", to_json(r.rank)},
         {"rank_sequence", seq},     {"delta_zero", r.delta_zero},
         {"strata", strata},         {"pass", r.pass}};
  j["parent"] = r.parent ? to_json(*r.parent) : Json(nullptr);
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

}  // namespace cblab
