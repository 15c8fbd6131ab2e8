#ifndef TRUMPING_EXACT_HPP
#define TRUMPING_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace trumping {

// Arbitrary-precision integers and rationals for exact certificates.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) {
  return static_cast<double>(q);
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// x^e for non-negative integer exponent.
inline BigInt ipow(const BigInt& x, unsigned long e) {
  BigInt result = 1;
  BigInt base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace trumping

#endif
