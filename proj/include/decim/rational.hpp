#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace decim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical reduced form, "num/den" with the denominator omitted when 1.
std::string format_rational(const Rational& r);

// Accepts "a/b" or a plain (possibly signed) integer literal.
Rational parse_rational(std::string_view text);

// r^n by repeated squaring, n >= 0.
Rational rational_pow(const Rational& r, std::uint64_t n);

}  // namespace decim
