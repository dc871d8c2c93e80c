#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace antipod {

// Exact arbitrary-precision rational, the only scalar type used on
// verification paths.  Backed by GMP; kept in lowest terms with a
// positive denominator (see parse_rational for the canonicalization
// caveat of the string constructor).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Serializes as "p" or "p/q" with q > 1; inverse of parse_rational.
std::string to_string(const Rational& value);

/// Exact ceil(value) as an Integer.
Integer rational_ceil(const Rational& value);

/// Exact floor(value).
Integer rational_floor(const Rational& value);

/// Best rational approximation of x with denominator <= max_denominator,
/// via the continued-fraction expansion of the exact binary value of x
/// (convergents plus the optimal semiconvergent). max_denominator >= 1.
/// Throws on non-finite input.
Rational snap_to_rational(double x, const Integer& max_denominator);

/// Same, starting from an exact rational instead of a double.
Rational snap_to_rational(const Rational& x, const Integer& max_denominator);

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace antipod
