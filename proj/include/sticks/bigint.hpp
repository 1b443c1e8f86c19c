#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sticks {

/// Arbitrary-precision signed integer. All exact counts and coefficients in
/// this library are BigInt; arithmetic never overflows or rounds.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow10(int exponent) {
    if (exponent < 0) throw std::domain_error("pow10: exponent must be >= 0");
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent));
}

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: n must be >= 0");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

/// Number of decimal digits of |x| (1 for x == 0).
inline int decimal_digits(const BigInt& x) {
    const BigInt magnitude = boost::multiprecision::abs(x);
    return static_cast<int>(magnitude.str().size());
}

}  // namespace sticks
