#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gallery {

/// Exact rational number in canonical form (positive denominator, reduced).
using Rational = mpq_class;

/// Parses an integer, a fraction `p/q`, or a finite decimal such as `-1.25`.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Shortest exact text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

/// Nearest double, for rendering only.
double to_double(const Rational& value);

}  // namespace gallery
