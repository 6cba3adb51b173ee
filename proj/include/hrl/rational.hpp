#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hrl {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

Rational make_rational(long num, long den = 1);

/// Exact value of a finite double.
Rational rational_from_double(double v);

/// Exact value of a finite long double.
Rational rational_from_long_double(long double v);

/// Nearest double, ties to even.
double to_double(const Rational& q);

/// Correctly rounded to 64 mantissa bits (x87 extended precision).
long double to_long_double(const Rational& q);

/// Approximate base-2 logarithm of |q|; q must be nonzero.
double log2_abs(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Canonical text "a" or "a/b".
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" with optional leading sign.
std::optional<Rational> parse_rational(const std::string& text);

/// The rational with the smallest denominator (then smallest magnitude
/// numerator) strictly inside (lo, hi). Requires lo < hi. A missing hi means
/// +infinity.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi);

}  // namespace hrl
