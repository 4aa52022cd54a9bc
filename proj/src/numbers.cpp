#include "crossout/numbers.hpp"

namespace crossout {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt odd_double_factorial(int n) {
  BigInt r = 1;
  for (int k = 1; k <= n; ++k) r *= 2 * k - 1;
  return r;
}

BigInt even_double_factorial(int n) {
  BigInt r = 1;
  for (int k = 1; k <= n; ++k) r *= 2 * k;
  return r;
}

BigInt catalan(int n) {
  // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace crossout
