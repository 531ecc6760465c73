#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace flagstar {

/// Arbitrary-precision integer used for every ring coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Exact rationals; only the linear solvers and the Groebner module use them.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

}  // namespace flagstar
