#include "eprop/rational.hpp"

#include <stdexcept>

namespace eprop {

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  const BigInt num(text.substr(0, slash));
  const BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
  return Rational(num, den);
}

}  // namespace eprop
