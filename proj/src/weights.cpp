#include "cblab/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace cblab {

Weight::Weight(int r, std::vector<int> parts) : r_(r), parts_(std::move(parts)) {
  if (r_ < 1) throw Error("weight: r must be >= 1");
  if (parts_.size() != static_cast<std::size_t>(r_) + 1) {
    throw Error("weight: expected " + std::to_string(r_ + 1) + " parts, got " +
                std::to_string(parts_.size()));
  }
  if (parts_.back() != 0) throw Error("weight: last part must be 0");
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    if (parts_[i] < parts_[i + 1]) throw Error("weight: parts must be non-increasing");
  }
}

Weight Weight::zero(int r) { return Weight(r, std::vector<int>(r + 1, 0)); }

Weight Weight::from_fundamental(std::span<const int> coords) {
  const int r = static_cast<int>(coords.size());
  std::vector<int> parts(r + 1, 0);
  for (int j = r - 1; j >= 0; --j) {
    if (coords[j] < 0) throw Error("weight: negative fundamental coordinate");
    parts[j] = parts[j + 1] + coords[j];
  }
  return Weight(r, std::move(parts));
}

Weight Weight::omega(int r, int j, int mult) {
  std::vector<int> parts(r + 1, 0);
  if (j > 0 && j <= r) {
    for (int i = 0; i < j; ++i) parts[i] = mult;
  }
  return Weight(r, std::move(parts));
}

int Weight::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::vector<int> Weight::fundamental_coords() const {
  std::vector<int> c(r_);
  for (int j = 0; j < r_; ++j) c[j] = parts_[j] - parts_[j + 1];
  return c;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.r()) * 0x9e3779b97f4a7c15ULL;
  for (int p : w.parts()) h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ULL;
  return h;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.parts().size(); ++i) {
    if (i) os << ',';
    os << w.parts()[i];
  }
  os << ']';
  return os.str();
}

LevelWeight::LevelWeight(Weight w, int l) : weight(std::move(w)), level(l) {
  if (level < 0 || weight.level_needed() > level) {
    throw Error("weight " + to_string(weight) + " exceeds level " + std::to_string(level));
  }
}

void BundleSpec::validate() const {
  if (r < 1) throw Error("spec: r must be >= 1");
  if (level < 0) throw Error("spec: level must be >= 0");
  if (genus < 0) throw Error("spec: genus must be >= 0");
  for (const auto& w : weights) {
    if (w.r() != r) throw Error("spec: weight " + to_string(w) + " is not an sl(r+1) weight");
    if (w.level_needed() > level) {
      throw Error("spec: weight " + to_string(w) + " exceeds level " + std::to_string(level));
    }
  }
}

void BundleSpec::validate_moduli() const {
  validate();
  if (2 * genus - 2 + n() <= 0) {
    throw Error("spec: M_{" + std::to_string(genus) + "," + std::to_string(n()) +
                "} is not a stable moduli space");
  }
}

std::vector<LevelWeight> enumerate_level_weights(int r, int level) {
  std::vector<LevelWeight> out;
  for (const auto& w : level_weight_set(r, level)) out.emplace_back(w, level);
  return out;
}

namespace {

void enumerate_parts(int r, int level, std::vector<int>& parts, std::size_t i,
                     std::vector<Weight>& out) {
  if (i == static_cast<std::size_t>(r)) {
    out.emplace_back(r, parts);
    return;
  }
  const int cap = i == 0 ? level : parts[i - 1];
  for (int p = 0; p <= cap; ++p) {
    parts[i] = p;
    enumerate_parts(r, level, parts, i + 1, out);
  }
  parts[i] = 0;
}

}  // namespace

const std::vector<Weight>& level_weight_set(int r, int level) {
  if (r < 1 || level < 0) throw Error("level_weight_set: need r >= 1, level >= 0");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Weight>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({r, level});
  if (it != cache.end()) return it->second;
  std::vector<Weight> out;
  std::vector<int> parts(r + 1, 0);
  enumerate_parts(r, level, parts, 0, out);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
  });
  return cache.emplace(std::make_pair(r, level), std::move(out)).first->second;
}

Weight dual(const Weight& w) {
  const auto& p = w.parts();
  const std::size_t k = p.size();
  std::vector<int> q(k);
  for (std::size_t i = 0; i < k; ++i) q[i] = p[0] - p[k - 1 - i];
  return Weight(w.r(), std::move(q));
}

Weight scale(const Weight& w, int m) {
  if (m < 0) throw Error("scale: m must be >= 0");
  std::vector<int> q = w.parts();
  for (int& v : q) v *= m;
  return Weight(w.r(), std::move(q));
}

BundleSpec scale_bundle(const BundleSpec& spec, int m) {
  if (m < 0) throw Error("scale_bundle: m must be >= 0");
  BundleSpec out = spec;
  out.level = spec.level * m;
  for (auto& w : out.weights) w = scale(w, m);
  return out;
}

LevelWeight pluss(const LevelWeight& w, int j) {
  const int r = w.weight.r();
  if (j < 0 || j > r) throw Error("pluss: rotation index out of range");
  std::vector<int> p = w.weight.parts();
  for (int step = 0; step < j; ++step) {
    std::vector<int> q(r + 1);
    q[0] = w.level;
    for (int i = 0; i < r; ++i) q[i + 1] = p[i];
    const int last = q[r];
    for (int& v : q) v -= last;
    p = std::move(q);
  }
  return LevelWeight(Weight(r, std::move(p)), w.level);
}

Rational casimir(const Weight& w) {
  const int r = w.r();
  BigInt acc = 0;
  for (int i = 0; i <= r; ++i) {
    const long p = w.part(static_cast<std::size_t>(i));
    acc += p * (p + r + 2 - 2 * (i + 1));
  }
  const long s = w.size();
  Rational c = Rational(acc) - frac(BigInt(s) * s, r + 1);
  c.canonicalize();
  return c;
}

}  // namespace cblab
