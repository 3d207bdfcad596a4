#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>

#include <string>
#include <string_view>

namespace lvwaves {

/// Exact fraction type used for the closed-form operations. Expression
/// templates are disabled so generic code can use std::min/std::max and
/// `auto` without surprises.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Parses "41/5", "-3", "0.125", "1e-3" or "3/2e1" style text into an exact
/// fraction. Decimal text is read exactly (0.1 becomes 1/10).
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite double (binary value, not its decimal text).
Rational rational_from_double(double value);

/// Reads a double through its shortest round-trip decimal form, so 0.1 maps to 1/10.
Rational rational_from_decimal_double(double value);

/// Correctly rounded conversion.
inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double d) { return d; }

std::string to_string(const Rational& r);

/// Scalar trait for the templated closed forms: double or Rational.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

}  // namespace lvwaves
