#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace berncone {

// All coefficients, moments and LP entries are arbitrary-precision exact
// rationals. Floating point appears only in clearly labelled convenience
// output (columns/fields named *_float).
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "n" or "n/d" with optional leading sign. Throws ParseError on
/// anything else (including a zero denominator).
Rational parse_rational(const std::string& text);

/// Canonical fraction text: "n/d", or just "n" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

/// Decimal string of the numerator (used by the JSON num/den fields).
std::string numerator_string(const Rational& value);
std::string denominator_string(const Rational& value);

double to_double(const Rational& value);

/// Shortest round-trip double formatting ("%.17g" trimmed); deterministic.
std::string to_float_string(const Rational& value);

}  // namespace berncone
