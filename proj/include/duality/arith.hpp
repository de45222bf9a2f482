#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace duality {

// Exact arithmetic used throughout: arbitrary-precision integers for all
// counts, rationals (always in lowest terms) for linear algebra.
using Int = mpz_class;
using Rat = mpq_class;

inline constexpr long long kDefaultBudget = 20000;

/// Thrown when a model builder would exceed the configured dimension budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// mpz_class has no long long constructor; go through long (LP64).
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

Int factorial(long n);

/// binomial(n, k); zero when k < 0 or k > n.
Int binomial(long n, long k);

/// base^exp as an exact integer, exp >= 0.
Int int_pow(long base, long exp);

/// Canonical rational string: "p" when the denominator is 1, else "p/q".
std::string rat_string(const Rat& r);

/// Parse "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

}  // namespace duality
