// rational.hpp — exact rational arithmetic used throughout (weights,
// piecewise-linear breakpoints, chain geometry). Backed by Boost.Multiprecision's
// header-only cpp_rational so no linked dependency is introduced.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace knaster {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "a/b" or "a" (optionally signed); error RationalParse on anything
// else, including b == 0.
Rational parse_rational(const std::string& text);

// Canonical text form: "a/b" in lowest terms, or plain "a" for integers.
std::string rational_str(const Rational& q);

// Numerator / denominator as int64, erroring with CountOverflow when the
// reduced value does not fit (the JSON wire format stores rationals as
// [num, den] pairs of 64-bit integers).
std::int64_t num_i64(const Rational& q);
std::int64_t den_i64(const Rational& q);

}  // namespace knaster
