#include "cblab/fusion.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

namespace cblab {

namespace {

int trimmed_length(const Partition& p) {
  int n = static_cast<int>(p.size());
  while (n > 0 && p[n - 1] == 0) --n;
  return n;
}

int total(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

void require_partition(const Partition& p, const char* what) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || (i > 0 && p[i] > p[i - 1])) {
      throw Error(std::string(what) + ": not a partition");
    }
  }
}

Partition padded(const Partition& p, int rows) {
  Partition out(rows, 0);
  for (int i = 0; i < std::min<int>(rows, p.size()); ++i) out[i] = p[i];
  return out;
}

}  // namespace

namespace {

// Walks LR skew tableaux of shape nu/outer and content `rem` through their
// row/letter count matrices. Leaves are tallied by nu.
struct LrWalk {
  int rows;
  int letters;
  std::vector<int> outer, rem, above, nu;
  // row_ends[i][j+1]: end column of letters <= j in row i; [0] is the outer part.
  std::vector<std::vector<int>> row_ends;
  int bits = 0;  // > 0: nu packed into one word
  std::unordered_map<std::uint64_t, std::int64_t> packed;
  std::map<Partition, std::int64_t> wide;

  void leaf() {
    if (bits > 0) {
      std::uint64_t key = 0;
      for (int v : nu) key = (key << bits) | static_cast<std::uint64_t>(v);
      ++packed[key];
    } else {
      ++wide[nu];
    }
  }

  void go(int i, int j) {
    std::vector<int>& ends = row_ends[i];
    const int top = std::min(i, letters - 1);
    if (j > top) {
      nu[i] = ends[top + 1];
      if (i > 0 && nu[i] > nu[i - 1]) return;
      if (i + 1 == rows) {
        leaf();
        return;
      }
      for (int t = 0; t <= top; ++t) above[t] += ends[t + 1] - ends[t];
      row_ends[i + 1][0] = outer[i + 1];
      go(i + 1, 0);
      for (int t = 0; t <= top; ++t) above[t] -= ends[t + 1] - ends[t];
      return;
    }
    int bound = rem[j];
    if (i > 0) {
      const std::vector<int>& up = row_ends[i - 1];
      const int up_top = std::min(i - 1, letters - 1);
      const int limit = j <= up_top + 1 ? up[j] : up[up_top + 1];
      bound = std::min(bound, limit - ends[j]);
      if (j > 0) bound = std::min(bound, above[j - 1] - above[j]);
    }
    if (i + 1 == rows) {
      // Last row must absorb everything left of this letter.
      if (bound < rem[j]) return;
      ends[j + 1] = ends[j] + rem[j];
      const int x = rem[j];
      rem[j] = 0;
      go(i, j + 1);
      rem[j] = x;
      return;
    }
    for (int x = 0; x <= bound; ++x) {
      ends[j + 1] = ends[j] + x;
      rem[j] -= x;
      go(i, j + 1);
      rem[j] += x;
    }
  }
};

}  // namespace

std::map<Partition, std::int64_t> lr_expand(const Partition& a, const Partition& b, int rows) {
  require_partition(a, "lr_expand");
  require_partition(b, "lr_expand");
  std::map<Partition, std::int64_t> out;
  if (trimmed_length(a) > rows || trimmed_length(b) > rows) return out;

  // Fill the skew shape nu/outer with the smaller partition as content.
  const bool swap = total(b) > total(a);
  const Partition outer = padded(swap ? b : a, rows);
  const Partition& raw = swap ? a : b;
  const int letters = trimmed_length(raw);

  if (letters == 0) {
    out[outer] = 1;
    return out;
  }

  LrWalk walk;
  walk.rows = rows;
  walk.letters = letters;
  walk.outer = outer;
  walk.rem.assign(raw.begin(), raw.begin() + letters);
  walk.above.assign(letters, 0);
  walk.nu.assign(rows, 0);
  walk.row_ends.assign(rows, std::vector<int>(letters + 1, 0));
  const int widest = outer[0] + total(raw);
  int bits = 1;
  while ((1 << bits) <= widest) ++bits;
  if (bits * rows <= 64) walk.bits = bits;
  walk.row_ends[0][0] = outer[0];
  walk.go(0, 0);

  if (walk.bits == 0) return std::move(walk.wide);
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  for (const auto& [key, count] : walk.packed) {
    Partition nu(rows);
    std::uint64_t k = key;
    for (int i = rows - 1; i >= 0; --i) {
      nu[i] = static_cast<int>(k & mask);
      k >>= bits;
    }
    out.emplace(std::move(nu), count);
  }
  return out;
}

std::int64_t lr_coefficient(const Partition& a, const Partition& b, const Partition& c) {
  require_partition(c, "lr_coefficient");
  if (total(c) != total(a) + total(b)) return 0;
  const int rows = std::max({trimmed_length(a), trimmed_length(b), trimmed_length(c), 1});
  const auto expansion = lr_expand(padded(a, rows), padded(b, rows), rows);
  auto it = expansion.find(padded(c, rows));
  return it == expansion.end() ? 0 : it->second;
}

RimHookReduction rim_hook_reduce(const Partition& p, int r, int level) {
  const int k = r + 1;
  const int n = k + level;
  if (trimmed_length(p) > k) throw Error("rim_hook_reduce: more than r+1 rows");
  RimHookReduction res;
  std::vector<int> beads(k);
  for (int i = 0; i < k; ++i) beads[i] = (i < static_cast<int>(p.size()) ? p[i] : 0) + k - 1 - i;
  for (;;) {
    auto top = std::max_element(beads.begin(), beads.end());
    if (*top < n) break;
    const int target = *top - n;
    int jumped = 0;
    for (int b : beads) {
      if (b == target) {
        res.vanishes = true;
        return res;
      }
      if (b > target && b < *top) ++jumped;
    }
    *top = target;
    ++res.degree;
    if ((k - 1 - jumped) % 2 != 0) res.sign = -res.sign;
  }
  std::sort(beads.begin(), beads.end(), std::greater<>());
  res.nu.resize(k);
  for (int i = 0; i < k; ++i) res.nu[i] = beads[i] - (k - 1 - i);
  return res;
}

QuantumProduct quantum_product(const Partition& a, const Partition& b, int r, int level) {
  const int k = r + 1;
  for (const Partition* p : {&a, &b}) {
    require_partition(*p, "quantum_product");
    if (trimmed_length(*p) > k || (!p->empty() && (*p)[0] > level)) {
      throw Error("quantum_product: partition does not fit the (r+1) x l box");
    }
  }
  QuantumProduct out;
  out.r = r;
  out.level = level;
  for (const auto& [rho, c] : lr_expand(padded(a, k), padded(b, k), k)) {
    const auto red = rim_hook_reduce(rho, r, level);
    if (red.vanishes) continue;
    auto& slot = out.terms[{red.nu, red.degree}];
    slot += red.sign * c;
    if (slot == 0) out.terms.erase({red.nu, red.degree});
  }
  return out;
}

std::pair<Partition, int> times_full_row(const Partition& p, int level) {
  const int k = static_cast<int>(p.size());
  Partition q(k);
  if (p[k - 1] == 0) {
    q[0] = level;
    for (int i = 1; i < k; ++i) q[i] = p[i - 1];
    return {q, 0};
  }
  for (int i = 0; i < k; ++i) q[i] = p[i] - 1;
  return {q, 1};
}

std::int64_t FusionRow::at(const Weight& nu) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), nu,
                             [](const auto& e, const Weight& w) { return e.first < w; });
  return it != entries.end() && it->first == nu ? it->second : 0;
}

FusionRow compute_fusion_row(const Weight& a, const Weight& b, int level) {
  if (a.r() != b.r()) throw Error("fusion: rank mismatch");
  if (a.level_needed() > level || b.level_needed() > level) {
    throw Error("fusion: weight exceeds level");
  }
  const int r = a.r();
  const int k = r + 1;
  const int tot = a.size() + b.size();
  FusionRow row;
  if (level == 0) {
    row.entries.emplace_back(Weight::zero(r), 1);
    return row;
  }
  const auto classical = lr_expand(a.parts(), b.parts(), k);

  // sigma_a * sigma_b after rim-hook reduction.
  std::map<std::pair<Partition, int>, std::int64_t> q0;
  for (const auto& [rho, c] : classical) {
    const auto red = rim_hook_reduce(rho, r, level);
    if (!red.vanishes) q0[{red.nu, red.degree}] += red.sign * c;
  }

  std::map<Weight, std::int64_t> found;
  int smax = -1;
  for (const auto& nu : level_weight_set(r, level)) {
    const int sum = tot + nu.size();
    if (sum % k != 0) continue;
    const int m = sum / k;
    const int s = m - level;
    if (s >= 0) {
      smax = std::max(smax, s);
      continue;
    }
    if (m < nu.part(0)) continue;
    Partition kappa(k);
    for (int i = 0; i < k; ++i) kappa[i] = m - nu.part(k - 1 - i);
    auto it = classical.find(kappa);
    if (it != classical.end() && it->second != 0) found[nu] = it->second;
  }

  // Coefficient of q^s sigma_{nu^c} in sigma_a * sigma_b * sigma_(l)^s.
  for (const auto& [key, c] : q0) {
    if (c == 0) continue;
    Partition cls = key.first;
    int deg = key.second;
    for (int t = 0; t <= smax; ++t) {
      if (t > 0) {
        auto [next, dq] = times_full_row(cls, level);
        cls = std::move(next);
        deg += dq;
      }
      if (deg != t || cls[0] != level) continue;
      std::vector<int> parts(k);
      for (int i = 0; i < k; ++i) parts[i] = level - cls[k - 1 - i];
      Weight nu(r, std::move(parts));
      if (tot + nu.size() != k * (level + t)) continue;
      found[nu] += c;
    }
  }
  for (auto& [nu, n] : found) {
    if (n < 0) throw Error("fusion: negative coefficient for " + to_string(nu));
    if (n != 0) row.entries.emplace_back(nu, n);
  }
  return row;
}

std::size_t FusionCache::TripleHash::operator()(const TripleKey& k) const noexcept {
  WeightHash h;
  return ((h(k.a) * 31 + h(k.b)) * 31 + h(k.c)) * 31 + static_cast<std::size_t>(k.level);
}

std::size_t FusionCache::PairHash::operator()(const PairKey& k) const noexcept {
  WeightHash h;
  return (h(k.a) * 31 + h(k.b)) * 31 + static_cast<std::size_t>(k.level);
}

FusionCache::TripleKey FusionCache::canonical(int level, const Weight& a, const Weight& b,
                                              const Weight& c) {
  std::array<Weight, 3> w{a, b, c};
  std::sort(w.begin(), w.end());
  return TripleKey{a.r(), level, w[0], w[1], w[2]};
}

FusionCache& FusionCache::global() {
  static FusionCache cache;
  return cache;
}

std::optional<std::int64_t> FusionCache::lookup(int level, const Weight& a, const Weight& b,
                                                const Weight& c) const {
  const auto key = canonical(level, a, b, c);
  std::shared_lock lock(mu_);
  auto it = triples_.find(key);
  if (it == triples_.end()) return std::nullopt;
  return it->second;
}

void FusionCache::insert(int level, const Weight& a, const Weight& b, const Weight& c,
                         std::int64_t n) {
  auto key = canonical(level, a, b, c);
  std::unique_lock lock(mu_);
  auto [it, fresh] = triples_.emplace(std::move(key), n);
  if (!fresh && it->second != n) {
    throw Error("fusion cache: conflicting values for one triple");
  }
}

std::size_t FusionCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::size_t count = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const int r = j.at("r").get<int>();
      const int level = j.at("l").get<int>();
      Weight a(r, j.at("a").get<std::vector<int>>());
      Weight b(r, j.at("b").get<std::vector<int>>());
      Weight c(r, j.at("c").get<std::vector<int>>());
      const BigInt n = parse_bigint(j.at("N").get<std::string>());
      if (!n.fits_slong_p() || n < 0) throw Error("value out of range");
      insert(level, a, b, c, n.get_si());
      ++count;
    } catch (const Error& e) {
      throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(path + ":" + std::to_string(lineno) + ": malformed cache record");
    }
  }
  return count;
}

void FusionCache::save(const std::string& path) const {
  std::vector<std::string> lines;
  {
    std::shared_lock lock(mu_);
    lines.reserve(triples_.size());
    for (const auto& [k, n] : triples_) {
      nlohmann::json j;
      j["r"] = k.r;
      j["l"] = k.level;
      j["a"] = k.a.parts();
      j["b"] = k.b.parts();
      j["c"] = k.c.parts();
      j["N"] = std::to_string(n);
      lines.push_back(j.dump());
    }
  }
  std::sort(lines.begin(), lines.end());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + path);
    for (const auto& l : lines) out << l << '\n';
    if (!out) throw Error("cannot write cache file " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot replace cache file " + path);
}

std::size_t FusionCache::size() const {
  std::shared_lock lock(mu_);
  return triples_.size();
}

std::size_t FusionCache::pair_count() const {
  std::shared_lock lock(mu_);
  return pairs_.size();
}

void FusionCache::clear() {
  std::unique_lock lock(mu_);
  triples_.clear();
  pairs_.clear();
}

std::shared_ptr<const FusionRow> FusionCache::pair(int level, const Weight& a, const Weight& b) {
  PairKey key{level, std::min(a, b), std::max(a, b)};
  {
    std::shared_lock lock(mu_);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second;
  }
  auto row = std::make_shared<const FusionRow>(compute_fusion_row(key.a, key.b, level));
  std::unique_lock lock(mu_);
  auto [it, fresh] = pairs_.emplace(std::move(key), row);
  if (fresh) {
    for (const auto& [nu, n] : row->entries) {
      auto tk = canonical(level, it->first.a, it->first.b, nu);
      auto [slot, added] = triples_.emplace(std::move(tk), n);
      if (!added && slot->second != n) {
        throw Error("fusion cache: stored triple disagrees with recomputation");
      }
    }
  }
  return it->second;
}

std::shared_ptr<const FusionRow> fusion_product(const Weight& a, const Weight& b, int level) {
  return FusionCache::global().pair(level, a, b);
}

std::int64_t fuse3(const Weight& a, const Weight& b, const Weight& c, int level) {
  if (a.r() != b.r() || a.r() != c.r()) throw Error("fuse3: rank mismatch");
  for (const Weight* w : {&a, &b, &c}) {
    if (w->level_needed() > level) throw Error("fuse3: weight exceeds level");
  }
  auto& cache = FusionCache::global();
  if (auto hit = cache.lookup(level, a, b, c)) return *hit;
  // Pair the two largest so the LR content is the third's complement partner.
  std::array<Weight, 3> w{a, b, c};
  std::sort(w.begin(), w.end(),
            [](const Weight& x, const Weight& y) { return x.size() < y.size(); });
  const std::int64_t n = cache.pair(level, w[0], w[1])->at(w[2]);
  cache.insert(level, a, b, c, n);
  return n;
}

std::int64_t fuse3(const LevelWeight& a, const LevelWeight& b, const LevelWeight& c) {
  if (a.level != b.level || a.level != c.level) throw Error("fuse3: level mismatch");
  return fuse3(a.weight, b.weight, c.weight, a.level);
}

int fuse3_sl2_oracle(int a, int b, int c, int level) {
  if ((a + b + c) % 2 != 0) return 0;
  if (c < std::abs(a - b)) return 0;
  if (c > std::min(a + b, 2 * level - a - b)) return 0;
  return 1;
}

BigInt rank_dictionary(const std::vector<Weight>& weights, int level) {
  if (weights.empty()) return 1;
  const int r = weights.front().r();
  const int k = r + 1;
  int sum = 0;
  for (const auto& w : weights) {
    if (w.r() != r) throw Error("rank_dictionary: rank mismatch");
    if (w.level_needed() > level) throw Error("rank_dictionary: weight exceeds level");
    sum += w.size();
  }
  if (weights.size() == 1) return weights[0].is_zero() ? 1 : 0;
  if (sum % k != 0) return 0;
  const int m = sum / k;
  const int s = m - level;

  if (s < 0) {
    std::map<Partition, BigInt> prod{{Partition(k, 0), 1}};
    for (const auto& w : weights) {
      std::map<Partition, BigInt> next;
      for (const auto& [p, c] : prod) {
        for (const auto& [q, d] : lr_expand(p, w.parts(), k)) next[q] += c * BigInt(d);
      }
      prod = std::move(next);
    }
    auto it = prod.find(Partition(k, m));
    return it == prod.end() ? BigInt(0) : it->second;
  }

  std::map<std::pair<Partition, int>, BigInt> prod{{{Partition(k, 0), 0}, 1}};
  for (const auto& w : weights) {
    std::map<std::pair<Partition, int>, BigInt> next;
    for (const auto& [key, c] : prod) {
      for (const auto& [q, d] : lr_expand(key.first, w.parts(), k)) {
        const auto red = rim_hook_reduce(q, r, level);
        if (red.vanishes) continue;
        next[{red.nu, key.second + red.degree}] += c * BigInt(d) * red.sign;
      }
    }
    prod = std::move(next);
  }
  Partition row(k, 0);
  row[0] = level;
  for (int t = 0; t < s; ++t) {
    std::map<std::pair<Partition, int>, BigInt> next;
    for (const auto& [key, c] : prod) {
      for (const auto& [q, d] : lr_expand(key.first, row, k)) {
        const auto red = rim_hook_reduce(q, r, level);
        if (red.vanishes) continue;
        next[{red.nu, key.second + red.degree}] += c * BigInt(d) * red.sign;
      }
    }
    prod = std::move(next);
  }
  auto it = prod.find({Partition(k, level), s});
  const BigInt out = it == prod.end() ? BigInt(0) : it->second;
  return out;
}

}  // namespace cblab
