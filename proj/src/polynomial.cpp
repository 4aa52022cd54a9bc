#include "crossout/polynomial.hpp"

#include "crossout/errors.hpp"

namespace crossout {

const char* to_string(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::r: return "r";
    case Var::t: return "t";
  }
  return "?";
}

Var var_from_string(const std::string& name) {
  if (name == "q") return Var::q;
  if (name == "r") return Var::r;
  if (name == "t") return Var::t;
  throw ValidationError("unknown variable '" + name + "'");
}

Polynomial::Polynomial(const BigInt& c) {
  if (c != 0) terms_.emplace(Exponents{0, 0, 0}, c);
}

Polynomial Polynomial::monomial(Var var, int exponent) {
  if (exponent < 0) throw ValidationError("negative exponent");
  Exponents e{0, 0, 0};
  e[static_cast<int>(var)] = exponent;
  return term(e, 1);
}

Polynomial Polynomial::term(const Exponents& e, const BigInt& c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

BigInt Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Polynomial::degree(Var var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(var)]);
  return d;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw ValidationError("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BigInt Polynomial::eval_at(const BigInt& q0, const BigInt& r0, const BigInt& t0) const {
  const BigInt* base[3] = {&q0, &r0, &t0};
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    BigInt v = c;
    for (int k = 0; k < 3; ++k) v *= boost::multiprecision::pow(*base[k], e[k]);
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"q", "r", "t"};
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string vars;
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += names[k];
      if (e[k] > 1) vars += '^' + std::to_string(e[k]);
    }
    if (vars.empty())
      out += mag.str();
    else if (mag == 1)
      out += vars;
    else
      out += mag.str() + "*" + vars;
  }
  return out;
}

Polynomial q_integer(int h, Var var) {
  if (h < 0) throw ValidationError("q-integer of negative h");
  Polynomial p;
  Exponents e{0, 0, 0};
  for (int k = 0; k < h; ++k) {
    e[static_cast<int>(var)] = k;
    p.add_term(e, 1);
  }
  return p;
}

}  // namespace crossout
