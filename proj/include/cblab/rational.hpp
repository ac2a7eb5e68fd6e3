#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cblab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binomial coefficient with the sheaf convention: zero whenever k < 0 or
/// n < k, including negative n (Sym of negative degree vanishes).
BigInt binom(std::int64_t n, std::int64_t k);

/// p/q in lowest terms. GMP does not reduce on construction, and equality
/// between unreduced values is wrong, so every two-argument rational goes
/// through here. Throws Error when q == 0.
Rational frac(const BigInt& p, const BigInt& q);

/// Lowest-terms "p/q" (or "p" when integral).
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p", "p/q"; throws Error on malformed input or zero
/// denominator.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

bool is_integer(const Rational& q);
/// Requires is_integer(q).
BigInt to_bigint(const Rational& q);

/// Exact solve of A x = b by Gauss-Jordan elimination. A is rows x cols and
/// may be overdetermined. `consistent` is false when no solution exists;
/// throws Error when the solution is not unique.
struct LinearSolveResult {
  bool consistent = false;
  std::vector<Rational> x;
};
LinearSolveResult solve_exact(std::vector<std::vector<Rational>> a,
                              std::vector<Rational> b);

/// Rank over Q of a list of row vectors (all of one length).
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace cblab
