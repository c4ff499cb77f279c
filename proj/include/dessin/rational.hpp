#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dessin {

/// Exact arbitrary-precision rational scalar. Always in lowest terms with a
/// positive denominator; no rounding anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// "p" when the denominator is 1, else "p/q".
std::string to_fraction_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-'). Throws ValidationError on
/// malformed input or a zero denominator.
Rational rational_from_string(const std::string& s);

}  // namespace dessin
