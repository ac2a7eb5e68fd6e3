#include "cblab/ranks.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "cblab/fusion.hpp"
#include "cblab/parallel.hpp"

namespace cblab {

namespace {

struct RankKey {
  int genus;
  int level;
  std::vector<Weight> weights;  // sorted
  auto operator<=>(const RankKey&) const = default;
};

std::shared_mutex rank_mu;
std::map<RankKey, BigInt> rank_memo;

bool is_simple_current(const Weight& w, int level) {
  for (int p : w.parts()) {
    if (p != 0 && p != level) return false;
  }
  return true;
}

void check_weights(const std::vector<Weight>& ws, int level) {
  if (level < 0) throw Error("rank: negative level");
  for (const auto& w : ws) {
    if (w.r() != ws.front().r()) throw Error("rank: weights of different rank");
    if (w.level_needed() > level) {
      throw Error("rank: weight " + to_string(w) + " exceeds level " + std::to_string(level));
    }
  }
}

/// Simple currents first (they keep the running vector a single entry),
/// then increasing size so the two largest weights meet last.
std::vector<Weight> fold_order(std::vector<Weight> ws, int level) {
  std::stable_sort(ws.begin(), ws.end(), [level](const Weight& a, const Weight& b) {
    const bool sa = is_simple_current(a, level), sb = is_simple_current(b, level);
    if (sa != sb) return sa;
    return a.size() < b.size();
  });
  return ws;
}

using RankMap = std::map<Weight, BigInt>;

/// W[mu] = rank(ws + {mu}) for the weights in the given order.
RankMap fold(const std::vector<Weight>& ws, int level) {
  if (ws.empty()) throw Error("rank: empty fold");
  RankMap cur;
  cur[dual(ws.front())] = 1;
  for (std::size_t i = 1; i < ws.size(); ++i) {
    RankMap next;
    for (const auto& [mu, c] : cur) {
      const auto row = fusion_product(dual(mu), ws[i], level);
      for (const auto& [nu, n] : row->entries) next[nu] += c * n;
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Weight> drop_zeros(const std::vector<Weight>& ws) {
  std::vector<Weight> out;
  for (const auto& w : ws) {
    if (!w.is_zero()) out.push_back(w);
  }
  return out;
}

BigInt genus0_small(const std::vector<Weight>& ws, int level) {
  switch (ws.size()) {
    case 0:
      return 1;
    case 1:
      return 0;  // zeros were dropped
    case 2:
      return ws[1] == dual(ws[0]) ? 1 : 0;
    default:
      return fuse3(ws[0], ws[1], ws[2], level);
  }
}

BigInt caterpillar(const std::vector<Weight>& input, int level) {
  const auto ws = fold_order(input, level);
  const std::size_t n = ws.size();
  const std::vector<Weight> head(ws.begin(), ws.end() - 2);
  const RankMap w = fold(head, level);
  const Weight& a = ws[n - 2];
  const Weight& b = ws[n - 1];
  BigInt total = 0;
  if (w.size() <= 2) {
    for (const auto& [mu, c] : w) total += c * fuse3(dual(mu), a, b, level);
    return total;
  }
  const auto row = fusion_product(a, b, level);
  for (const auto& [mu, c] : w) {
    const auto n3 = row->at(dual(mu));
    if (n3 != 0) total += c * n3;
  }
  return total;
}

BigInt balanced(const std::vector<Weight>& ws, int level) {
  const std::size_t half = ws.size() / 2;
  const std::vector<Weight> left(ws.begin(), ws.begin() + half);
  const std::vector<Weight> right(ws.begin() + half, ws.end());
  const RankMap x = fold(left, level);
  const RankMap y = fold(right, level);
  BigInt total = 0;
  for (const auto& [mu, c] : x) {
    auto it = y.find(dual(mu));
    if (it != y.end()) total += c * it->second;
  }
  return total;
}

}  // namespace

BigInt rank_genus0(const std::vector<Weight>& weights, int level, TreeShape shape) {
  if (weights.empty()) return 1;
  check_weights(weights, level);
  auto ws = drop_zeros(weights);
  if (ws.size() <= 3) return genus0_small(ws, level);
  if (shape == TreeShape::balanced) return balanced(ws, level);

  RankKey key{0, level, ws};
  std::sort(key.weights.begin(), key.weights.end());
  {
    std::shared_lock lock(rank_mu);
    auto it = rank_memo.find(key);
    if (it != rank_memo.end()) return it->second;
  }
  BigInt value = caterpillar(ws, level);
  std::unique_lock lock(rank_mu);
  rank_memo.emplace(std::move(key), value);
  return value;
}

BigInt rank(int genus, const std::vector<Weight>& weights, int level, TreeShape shape) {
  if (genus < 0) throw Error("rank: negative genus");
  if (genus == 0) return rank_genus0(weights, level, shape);
  check_weights(weights, level);
  RankKey key{genus, level, weights};
  std::sort(key.weights.begin(), key.weights.end());
  if (shape == TreeShape::caterpillar) {
    std::shared_lock lock(rank_mu);
    auto it = rank_memo.find(key);
    if (it != rank_memo.end()) return it->second;
  }
  const int r = weights.empty() ? 0 : weights.front().r();
  if (r == 0) throw Error("rank: genus >= 1 with no weights needs the algebra; use BundleSpec");
  const auto& pl = level_weight_set(r, level);
  std::vector<BigInt> parts(pl.size());
  parallel_for(pl.size(), [&](std::size_t i) {
    auto ws = weights;
    ws.push_back(pl[i]);
    ws.push_back(dual(pl[i]));
    parts[i] = rank(genus - 1, ws, level, shape);
  });
  BigInt value = 0;
  for (const auto& p : parts) value += p;
  if (shape == TreeShape::caterpillar) {
    std::unique_lock lock(rank_mu);
    rank_memo.emplace(std::move(key), value);
  }
  return value;
}

BigInt rank(const BundleSpec& spec, TreeShape shape) {
  spec.validate();
  if (spec.genus == 0 || !spec.weights.empty()) {
    return rank(spec.genus, spec.weights, spec.level, shape);
  }
  // No marked points: seed the first handle with a zero weight, which is
  // invisible to the rank.
  return rank(spec.genus, {Weight::zero(spec.r)}, spec.level, shape);
}

std::vector<std::pair<Weight, BigInt>> rank_vector_genus0(const std::vector<Weight>& weights,
                                                          int level) {
  check_weights(weights, level);
  auto ws = drop_zeros(weights);
  std::vector<std::pair<Weight, BigInt>> out;
  if (ws.empty()) {
    if (weights.empty()) throw Error("rank_vector_genus0: algebra unknown without weights");
    out.emplace_back(Weight::zero(weights.front().r()), 1);
    return out;
  }
  for (auto& [mu, c] : fold(fold_order(ws, level), level)) {
    if (c != 0) out.emplace_back(mu, c);
  }
  return out;
}

RankSequence rank_sequence(const BundleSpec& spec, int max_m) {
  if (max_m < 1) throw Error("rank_sequence: M must be >= 1");
  spec.validate();
  RankSequence seq;
  seq.spec = spec;
  extend_rank_sequence(seq, max_m);
  return seq;
}

void extend_rank_sequence(RankSequence& seq, int new_max) {
  const int start = static_cast<int>(seq.values.size());
  if (new_max < start) return;
  seq.values.resize(new_max + 1);
  for (int m = start; m <= new_max; ++m) {
    seq.values[m] = m == 0 ? BigInt(1) : rank(scale_bundle(seq.spec, m));
  }
}

BoundaryStratum BoundaryStratum::separating(int g1, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  return {Kind::separating, g1, std::move(J)};
}

std::string to_string(const BoundaryStratum& s) {
  if (s.kind == BoundaryStratum::Kind::irreducible) return "Delta_irr";
  std::ostringstream os;
  os << "Delta_{" << s.g1 << ",{";
  for (std::size_t i = 0; i < s.J.size(); ++i) os << (i ? "," : "") << s.J[i];
  os << "}}";
  return os.str();
}

namespace {

std::vector<int> complement(const std::vector<int>& J, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(J.begin(), J.end(), i)) out.push_back(i);
  }
  return out;
}

}  // namespace

void validate_stratum(const BoundaryStratum& s, int genus, int n) {
  if (s.kind == BoundaryStratum::Kind::irreducible) {
    if (genus < 1) throw Error("stratum: Delta_irr needs genus >= 1");
    return;
  }
  if (s.g1 < 0 || s.g1 > genus) throw Error("stratum: g1 out of range");
  for (std::size_t i = 0; i < s.J.size(); ++i) {
    if (s.J[i] < 1 || s.J[i] > n) throw Error("stratum: marked point out of range");
    if (i > 0 && s.J[i] <= s.J[i - 1]) throw Error("stratum: J must be a sorted set");
  }
  const int a = static_cast<int>(s.J.size());
  if (2 * s.g1 + a < 2 || 2 * (genus - s.g1) + (n - a) < 2) {
    throw Error("stratum: " + to_string(s) + " has an unstable side");
  }
}

std::vector<BoundaryStratum> boundary_strata(int genus, int n) {
  if (genus < 0 || n < 0) throw Error("boundary_strata: bad (g, n)");
  std::vector<BoundaryStratum> out;
  if (genus >= 1) out.push_back(BoundaryStratum::irreducible());
  for (int g1 = 0; g1 <= genus; ++g1) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> J;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) J.push_back(i + 1);
      }
      const int a = static_cast<int>(J.size());
      if (2 * g1 + a < 2 || 2 * (genus - g1) + (n - a) < 2) continue;
      const int g2 = genus - g1;
      bool canonical = g1 < g2;
      if (g1 == g2) canonical = n == 0 || (mask & 1u);
      if (canonical) out.push_back(BoundaryStratum::separating(g1, J));
    }
  }
  return out;
}

std::vector<RestrictionEntry> restriction_data(const BundleSpec& spec,
                                               const BoundaryStratum& stratum) {
  spec.validate();
  validate_stratum(stratum, spec.genus, spec.n());
  const auto& pl = level_weight_set(spec.r, spec.level);
  std::vector<std::optional<RestrictionEntry>> found(pl.size());
  if (stratum.kind == BoundaryStratum::Kind::irreducible) {
    parallel_for(pl.size(), [&](std::size_t i) {
      auto ws = spec.weights;
      ws.push_back(pl[i]);
      ws.push_back(dual(pl[i]));
      BigInt r1 = rank(spec.genus - 1, ws, spec.level);
      if (r1 != 0) found[i] = RestrictionEntry{LevelWeight(pl[i], spec.level), r1, 1};
    });
  } else {
    std::vector<Weight> left, right;
    const auto jc = complement(stratum.J, spec.n());
    for (int j : stratum.J) left.push_back(spec.weights[j - 1]);
    for (int j : jc) right.push_back(spec.weights[j - 1]);
    parallel_for(pl.size(), [&](std::size_t i) {
      auto l = left;
      l.push_back(pl[i]);
      BigInt r1 = rank(stratum.g1, l, spec.level);
      if (r1 == 0) return;
      auto rr = right;
      rr.push_back(dual(pl[i]));
      BigInt r2 = rank(spec.genus - stratum.g1, rr, spec.level);
      if (r2 != 0) found[i] = RestrictionEntry{LevelWeight(pl[i], spec.level), r1, r2};
    });
  }
  std::vector<RestrictionEntry> out;
  for (auto& e : found) {
    if (e) out.push_back(std::move(*e));
  }
  return out;
}

void clear_rank_cache() {
  std::unique_lock lock(rank_mu);
  rank_memo.clear();
}

}  // namespace cblab
