#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "divclass/error.hpp"

namespace divclass {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(num, den);
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Lowest terms with positive denominator; integers print without "/1".
inline std::string to_string(const Rational& q) {
  std::string out = boost::multiprecision::numerator(q).str();
  const Integer& den = boost::multiprecision::denominator(q);
  if (den != 1) out += "/" + den.str();
  return out;
}

inline Integer factorial(int n) {
  if (n < 0) throw InputError("factorial of a negative integer");
  Integer out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace divclass
