#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace eprop {

// Exact arbitrary-precision rational; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

Rational parse_rational(const std::string& text);

}  // namespace eprop
