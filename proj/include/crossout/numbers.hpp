#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossout {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
/// 1*3*...*(2n-1); equals 1 for n <= 0.
BigInt odd_double_factorial(int n);
/// 2*4*...*(2n); equals 1 for n <= 0.
BigInt even_double_factorial(int n);
BigInt catalan(int n);

inline std::string to_string(const BigInt& x) { return x.str(); }
/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);

}  // namespace crossout
