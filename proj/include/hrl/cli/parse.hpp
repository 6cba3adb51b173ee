#pragma once

#include <string>
#include <vector>

#include "hrl/ratpoly.hpp"

namespace hrl::cli {

/// Parses a univariate polynomial in x. Accepts integer and rational
/// literals (a, a/b), x, + - * ^ with nonnegative integer exponents,
/// implicit products such as "2x" or "3(x+1)", and parentheses. Whitespace
/// is ignored. Throws ParseError with the 0-based offending offset.
RatPoly parse_poly(const std::string& src);

/// Splits "Q1;Q2;..." and parses each part.
std::vector<RatPoly> parse_poly_list(const std::string& src);

/// Largest exponent parse_poly accepts.
inline constexpr unsigned long kMaxExponent = 4096;

}  // namespace hrl::cli
