#include "cblab/hypotheses.hpp"

#include <algorithm>

namespace cblab {

bool is_free(const std::vector<LevelWeight>& data) {
  if (data.empty()) throw Error("is_free: empty restriction data");
  std::vector<std::vector<Rational>> rows;
  for (const auto& lw : data) {
    std::vector<Rational> row;
    for (int c : lw.weight.fundamental_coords()) row.emplace_back(c);
    row.emplace_back(1);
    rows.push_back(std::move(row));
  }
  return matrix_rank(rows) == data.size();
}

bool is_quasi_rank_one(const std::vector<RestrictionEntry>& data) {
  int big = 0;
  for (const auto& e : data) {
    if (e.rank1 * e.rank2 > 1) ++big;
  }
  return big <= 1;
}

namespace {

std::vector<int> complement(const std::vector<int>& J, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (std::find(J.begin(), J.end(), i) == J.end()) out.push_back(i);
  }
  return out;
}

}  // namespace

std::optional<SocleReport> socle_check(const BundleSpec& spec, const BoundaryStratum& stratum,
                                       const std::vector<RestrictionEntry>& data,
                                       const ScalingReport& parent, int max_m) {
  if (!is_quasi_rank_one(data)) throw Error("socle_check: factorization is not quasi rank one");
  const RestrictionEntry* socle = nullptr;
  for (const auto& e : data) {
    if (e.rank1 * e.rank2 > 1) socle = &e;
  }
  if (!socle) return std::nullopt;

  SocleReport rep;
  rep.mu = socle->mu.weight;
  rep.product = socle->rank1 * socle->rank2;
  rep.sequence.push_back(1);
  for (int m = 1; m <= max_m; ++m) {
    const BundleSpec s = scale_bundle(spec, m);
    const Weight mu = scale(rep.mu, m);
    BigInt value;
    if (stratum.kind == BoundaryStratum::Kind::irreducible) {
      auto ws = s.weights;
      ws.push_back(mu);
      ws.push_back(dual(mu));
      value = rank(spec.genus - 1, ws, s.level);
    } else {
      std::vector<Weight> left, right;
      for (int j : stratum.J) left.push_back(s.weights[j - 1]);
      for (int j : complement(stratum.J, spec.n())) right.push_back(s.weights[j - 1]);
      left.push_back(mu);
      right.push_back(dual(mu));
      value = rank(stratum.g1, left, s.level) * rank(spec.genus - stratum.g1, right, s.level);
    }
    rep.sequence.push_back(value);
  }
  try {
    rep.report = classify(rep.sequence);
  } catch (const Error& e) {
    rep.reason = "socle rank sequence inconclusive";
    return rep;
  }
  if (rep.report->Delta != 0) {
    rep.reason = "socle Delta-invariant " + rep.report->Delta.get_str() + " != 0";
  } else if (rep.report->D != parent.D) {
    rep.reason = "socle degree " + rep.report->D.get_str() + " != " + parent.D.get_str();
  } else {
    rep.pass = true;
  }
  return rep;
}

HypothesisReport check_boundary_hypotheses(const BundleSpec& spec, int max_m) {
  spec.validate_moduli();
  if (spec.genus > 2) throw Error("check_boundary_hypotheses: genus > 2 is not supported");
  HypothesisReport rep;
  rep.spec = spec;
  rep.rank = rank(spec);

  RankSequence seq;
  try {
    rep.parent = classify_spec(spec, seq, max_m);
  } catch (const Error&) {
    rep.parent.reset();
  }
  rep.rank_sequence = seq.values;
  rep.delta_zero = rep.parent && rep.parent->Delta == 0;
  const int socle_m = std::max(3, static_cast<int>(seq.values.size()) - 1);

  for (const auto& stratum : boundary_strata(spec.genus, spec.n())) {
    StratumReport sr;
    sr.stratum = stratum;
    sr.data = restriction_data(spec, stratum);
    for (const auto& e : sr.data) sr.product_sum += e.rank1 * e.rank2;
    sr.conserved = sr.product_sum == rep.rank;
    std::vector<LevelWeight> mus;
    for (const auto& e : sr.data) mus.push_back(e.mu);
    sr.free = !mus.empty() && is_free(mus);
    sr.quasi_rank_one = is_quasi_rank_one(sr.data);
    if (sr.quasi_rank_one && rep.parent) {
      sr.socle = socle_check(spec, stratum, sr.data, *rep.parent, socle_m);
    }
    if (!sr.conserved) {
      sr.failure = "factorization conservation";
    } else if (sr.data.empty()) {
      sr.failure = "no restriction data";
    } else if (!sr.free) {
      sr.failure = "restriction data not free";
    } else if (!sr.quasi_rank_one) {
      sr.failure = "not quasi rank one";
    } else if (!rep.parent) {
      sr.failure = "parent rank sequence inconclusive";
    } else if (sr.socle && !sr.socle->pass) {
      sr.failure = sr.socle->reason;
    }
    sr.pass = sr.failure.empty();
    rep.strata.push_back(std::move(sr));
  }

  if (!rep.parent) {
    rep.failure = "rank sequence inconclusive";
  } else if (!rep.delta_zero) {
    rep.failure = "Delta-invariant " + rep.parent->Delta.get_str() + " != 0";
  } else {
    for (const auto& sr : rep.strata) {
      if (!sr.pass) {
        rep.failure = to_string(sr.stratum) + ": " + sr.failure;
        break;
      }
    }
  }
  rep.pass = rep.failure.empty();
  return rep;
}

}  // namespace cblab
