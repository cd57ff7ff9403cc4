#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace halfdepth {

/// Arbitrary-precision integers and rationals used wherever mass bookkeeping
/// must be exact (atom weights, atomic depth values, tie decisions).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion; every finite double is a dyadic rational.
/// Throws std::invalid_argument for NaN/infinity.
Rational rational_from_double(double x);

double rational_to_double(const Rational& q);

/// Parses "p/q" or a plain integer string. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// "p/q" when the denominator is not 1, otherwise just "p".
std::string rational_to_string(const Rational& q);

BigInt floor_rational(const Rational& q);
BigInt ceil_rational(const Rational& q);

/// The rational with the smallest denominator (ties: smallest |numerator|)
/// inside the closed interval [lo, hi]. Requires lo <= hi. This is the
/// Stern-Brocot walk used to snap bisection brackets onto exact coordinates.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace halfdepth
