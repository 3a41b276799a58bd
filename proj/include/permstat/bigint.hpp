#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat {

// Expression templates stay off: arithmetic yields concrete values, which
// keeps these types usable as map values and in aggregate initialization.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using BigRat =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

inline BigInt big_factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt big_pow(BigInt base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace permstat
