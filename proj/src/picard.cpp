#include "cblab/picard.hpp"

#include <algorithm>
#include <sstream>

namespace cblab {

std::string to_string(const FCurve& f) {
  std::ostringstream os;
  for (const auto& b : f.blocks) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
  }
  return os.str();
}

std::vector<FCurve> fcurves(int n) {
  if (n < 4) throw Error("fcurves: need n >= 4");
  std::vector<FCurve> out;
  std::vector<int> label(n, 0);
  // Restricted growth strings with exactly four distinct labels.
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (n - i < 4 - used) return;
    if (i == n) {
      FCurve f;
      for (int p = 0; p < n; ++p) f.blocks[label[p]].push_back(p + 1);
      out.push_back(std::move(f));
      return;
    }
    for (int b = 0; b <= std::min(used, 3); ++b) {
      label[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  label[0] = 0;
  rec(rec, 1, 1);
  return out;
}

int pair_boundary_fcurve(const std::vector<int>& I, const FCurve& f, int n) {
  const int size = static_cast<int>(I.size());
  if (size < 2 || size > n - 2) throw Error("pair_boundary_fcurve: need 2 <= |I| <= n-2");
  std::vector<char> in(n + 1, 0);
  for (int i : I) {
    if (i < 1 || i > n) throw Error("pair_boundary_fcurve: point out of range");
    in[i] = 1;
  }
  // For each block: fully inside I, fully outside, or split.
  int inside = 0, outside = 0;
  std::array<int, 4> state{};
  for (int b = 0; b < 4; ++b) {
    int hits = 0;
    for (int p : f.blocks[b]) hits += in[p];
    if (hits == 0) {
      state[b] = 0;
      ++outside;
    } else if (hits == static_cast<int>(f.blocks[b].size())) {
      state[b] = 1;
      ++inside;
    } else {
      return 0;
    }
  }
  if (inside == 2) return 1;
  for (int b = 0; b < 4; ++b) {
    if (f.blocks[b].size() < 2) continue;
    if ((inside == 1 && state[b] == 1) || (outside == 1 && state[b] == 0)) return -1;
  }
  return 0;
}

DivisorClassM0n DivisorClassM0n::operator+(const DivisorClassM0n& o) const {
  if (n != o.n || values.size() != o.values.size()) throw Error("divisor class: space mismatch");
  DivisorClassM0n r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

DivisorClassM0n DivisorClassM0n::operator-(const DivisorClassM0n& o) const {
  return *this + o * Rational(-1);
}

DivisorClassM0n DivisorClassM0n::operator*(const Rational& c) const {
  DivisorClassM0n r = *this;
  for (auto& v : r.values) v *= c;
  return r;
}

bool DivisorClassM0n::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

DivisorClassM0n boundary_class(const std::vector<int>& I, int n) {
  DivisorClassM0n c;
  c.n = n;
  for (const auto& f : fcurves(n)) c.values.emplace_back(pair_boundary_fcurve(I, f, n));
  return c;
}

const std::array<std::vector<int>, 5>& nonadjacent_basis_n5() {
  static const std::array<std::vector<int>, 5> basis{
      std::vector<int>{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}};
  return basis;
}

std::array<Rational, 5> to_nonadjacent_basis_n5(const DivisorClassM0n& c) {
  if (c.n != 5) throw Error("nonadjacent basis: class is not on M_{0,5}");
  const auto curves = fcurves(5);
  if (c.values.size() != curves.size()) throw Error("nonadjacent basis: wrong vector length");
  std::vector<std::vector<Rational>> a;
  for (const auto& f : curves) {
    std::vector<Rational> row;
    for (const auto& b : nonadjacent_basis_n5()) row.emplace_back(pair_boundary_fcurve(b, f, 5));
    a.push_back(std::move(row));
  }
  const auto res = solve_exact(a, c.values);
  if (!res.consistent) {
    throw Error("nonadjacent basis: F-curve pairings are inconsistent (not a divisor class)");
  }
  std::array<Rational, 5> x;
  std::copy(res.x.begin(), res.x.end(), x.begin());
  return x;
}

DivisorClassM0n from_nonadjacent_basis_n5(const std::array<Rational, 5>& x) {
  DivisorClassM0n c{5, std::vector<Rational>(10, 0)};
  for (int i = 0; i < 5; ++i) c = c + boundary_class(nonadjacent_basis_n5()[i], 5) * x[i];
  return c;
}

std::pair<Rational, Rational> m2_solve(const Rational& pigtail, const Rational& elliptic) {
  const auto res = solve_exact({{Rational(-2), Rational(1)}, {Rational(1), Rational(-1, 12)}},
                               {pigtail, elliptic});
  return {res.x[0], res.x[1]};
}

std::string to_string(SmallSpace s) {
  switch (s) {
    case SmallSpace::M11:
      return "M11";
    case SmallSpace::M2:
      return "M2";
    case SmallSpace::M3:
      return "M3";
    case SmallSpace::M21:
      return "M21";
  }
  return "?";
}

SmallSpace parse_small_space(const std::string& s) {
  if (s == "M11") return SmallSpace::M11;
  if (s == "M2") return SmallSpace::M2;
  if (s == "M3") return SmallSpace::M3;
  if (s == "M21") return SmallSpace::M21;
  throw Error("unknown space tag '" + s + "' (expected M11, M2, M3 or M21)");
}

const std::vector<std::string>& generator_names(SmallSpace s) {
  static const std::vector<std::string> m11{"deg"};
  static const std::vector<std::string> m23{"lambda", "delta_irr", "delta_1"};
  static const std::vector<std::string> m21{"lambda", "psi_1", "delta_irr", "delta_1"};
  switch (s) {
    case SmallSpace::M11:
      return m11;
    case SmallSpace::M21:
      return m21;
    default:
      return m23;
  }
}

DivisorClassSmall::DivisorClassSmall(SmallSpace s, std::vector<Rational> c)
    : space(s), coords(std::move(c)) {
  if (coords.size() != generator_names(s).size()) {
    throw Error("divisor class on " + to_string(s) + ": expected " +
                std::to_string(generator_names(s).size()) + " coordinates");
  }
}

DivisorClassSmall DivisorClassSmall::normalized() const {
  DivisorClassSmall r = *this;
  if (space == SmallSpace::M2 || space == SmallSpace::M21) {
    const std::size_t irr = coords.size() - 2, d1 = coords.size() - 1;
    const Rational l = r.coords[0];
    r.coords[0] = 0;
    r.coords[irr] += l / 10;
    r.coords[d1] += l / 5;
  }
  return r;
}

bool DivisorClassSmall::is_zero() const {
  const auto n = normalized();
  return std::all_of(n.coords.begin(), n.coords.end(), [](const Rational& v) { return v == 0; });
}

bool DivisorClassSmall::equivalent(const DivisorClassSmall& o) const { return (*this - o).is_zero(); }

DivisorClassSmall DivisorClassSmall::operator+(const DivisorClassSmall& o) const {
  if (space != o.space) throw Error("divisor class: space mismatch");
  DivisorClassSmall r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

DivisorClassSmall DivisorClassSmall::operator-(const DivisorClassSmall& o) const {
  return *this + o * Rational(-1);
}

DivisorClassSmall DivisorClassSmall::operator*(const Rational& c) const {
  DivisorClassSmall r = *this;
  for (auto& v : r.coords) v *= c;
  return r;
}

std::string to_string(const DivisorClassSmall& c) {
  const auto& names = generator_names(c.space);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i] == 0) continue;
    if (!first) os << (c.coords[i] < 0 ? " - " : " + ");
    else if (c.coords[i] < 0) os << '-';
    first = false;
    os << to_string(Rational(abs(c.coords[i]))) << ' ' << names[i];
  }
  return first ? "0" : os.str();
}

DivisorClassSmall hyperelliptic_m3() {
  return DivisorClassSmall(SmallSpace::M3, {9, -1, -3});
}

std::optional<std::pair<Rational, Rational>> split_h_delta1(const DivisorClassSmall& c) {
  if (c.space != SmallSpace::M3) throw Error("split_h_delta1: class must live on M3");
  const auto res = solve_exact({{9, 0}, {-1, 0}, {-3, 1}}, c.coords);
  if (!res.consistent) return std::nullopt;
  return std::make_pair(res.x[0], res.x[1]);
}

}  // namespace cblab
