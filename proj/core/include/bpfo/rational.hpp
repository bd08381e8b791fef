#ifndef BPFO_RATIONAL_HPP
#define BPFO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "bpfo/errors.hpp"

namespace bpfo {

using Integer = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, always canonical: positive
/// denominator, gcd(|num|, den) = 1. cpp_rational maintains the
/// canonical form on every operation.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" with an optional leading minus; q > 0 required.
/// Throws ParseError on anything else (floats are rejected by design).
Rational parse_rational(std::string_view text);

/// Renders "p" or "p/q" (denominator omitted when 1). Inverse of
/// parse_rational on canonical values.
std::string to_string(const Rational& r);

inline Rational rational_inv(const Rational& r) {
    if (r.is_zero())
        throw DivisionByZero("cannot invert zero rational");
    return 1 / r;
}

/// r^n for integer n (negative n inverts). 0^0 = 1.
Rational rational_pow(const Rational& r, long n);

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational field_inv(const Rational& r) { return rational_inv(r); }

} // namespace bpfo

#endif
