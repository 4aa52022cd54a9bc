#pragma once

#include <array>
#include <map>
#include <string>

#include "crossout/numbers.hpp"

namespace crossout {

enum class Var { q = 0, r = 1, t = 2 };

const char* to_string(Var v);
Var var_from_string(const std::string& name);

/// Exponents (e_q, e_r, e_t).
using Exponents = std::array<int, 3>;

/// Graded lexicographic order, largest first. Iterating a polynomial's terms
/// visits them in this order, which is also the text/JSON order.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = a[0] + a[1] + a[2];
    const int db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

/// Exact polynomial in q, r, t with integer coefficients. Zero coefficients
/// are never stored, so equality is term-map equality.
class Polynomial {
 public:
  using Terms = std::map<Exponents, BigInt, GradedLexDescending>;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const BigInt& c);                  // NOLINT(google-explicit-constructor)

  /// var^exponent; throws ValidationError for negative exponents.
  static Polynomial monomial(Var var, int exponent);
  /// Single term c * q^e_q r^e_r t^e_t.
  static Polynomial term(const Exponents& e, const BigInt& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const Exponents& e) const;
  int degree(Var var) const;  // -1 for the zero polynomial

  /// Adds c * q^e_q r^e_r t^e_t in place.
  void add_term(const Exponents& e, const BigInt& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  BigInt eval_at(const BigInt& q0, const BigInt& r0, const BigInt& t0) const;

  /// "3*q^2*t + q + 1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline BigInt eval_at(const Polynomial& p, const BigInt& q0, const BigInt& r0,
                      const BigInt& t0) {
  return p.eval_at(q0, r0, t0);
}

/// [h]_var = 1 + var + ... + var^{h-1}; [0] = 0. Throws for h < 0.
Polynomial q_integer(int h, Var var);

/// prod_{k in ks} [k]_var.
template <typename Range>
Polynomial q_product(const Range& ks, Var var) {
  Polynomial p = 1;
  for (int k : ks) p *= q_integer(k, var);
  return p;
}

}  // namespace crossout
