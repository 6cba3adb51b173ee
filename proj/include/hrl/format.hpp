#pragma once

#include <string>

namespace hrl {

/// Shortest decimal text that reads back to the same double; "inf", "-inf"
/// and "nan" for non-finite values.
std::string format_double(double v);

/// Fixed-point text with the given number of decimals (for SVG coordinates).
std::string format_fixed(double v, int decimals);

}  // namespace hrl
