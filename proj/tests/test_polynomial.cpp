#include <doctest.h>

#include <random>

#include "crossout/errors.hpp"
#include "crossout/polynomial.hpp"

using namespace crossout;

namespace {

Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 5);
  std::uniform_int_distribution<int> exp(0, 8);
  std::uniform_int_distribution<int> coeff(-20, 20);
  Polynomial p;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    // Keep the total degree at most 8.
    int eq = exp(rng);
    int er = std::uniform_int_distribution<int>(0, 8 - eq)(rng);
    int et = std::uniform_int_distribution<int>(0, 8 - eq - er)(rng);
    p.add_term({eq, er, et}, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("q-integers") {
  const Polynomial q = Polynomial::monomial(Var::q, 1);
  CHECK(q_integer(3, Var::q) == 1 + q + q * q);
  CHECK(q_integer(3, Var::q).to_string() == "q^2 + q + 1");
  CHECK(q_integer(1, Var::r) == 1);
  CHECK(q_integer(0, Var::t).is_zero());
  CHECK_THROWS_AS(q_integer(-1, Var::q), ValidationError);
  CHECK_THROWS_AS(Polynomial::monomial(Var::q, -2), ValidationError);

  const Polynomial p = q_integer(3, Var::r);
  CHECK(add(p, Polynomial()) == p);
  CHECK(mul(q_integer(2, Var::q), q_integer(2, Var::q)) == 1 + 2 * q + q * q);
}

TEST_CASE("text form uses graded lexicographic order") {
  const Polynomial q = Polynomial::monomial(Var::q, 1);
  const Polynomial t = Polynomial::monomial(Var::t, 1);
  const Polynomial r = Polynomial::monomial(Var::r, 1);
  CHECK((3 * q * q * t + q + 1).to_string() == "3*q^2*t + q + 1");
  CHECK((1 - 2 * q).to_string() == "-2*q + 1");
  CHECK((t + r + q).to_string() == "q + r + t");
  CHECK((q * r - q * q).to_string() == "-q^2 + q*r");
  CHECK(Polynomial().to_string() == "0");
  CHECK((q - q).is_zero());
  CHECK((-q).coefficient({1, 0, 0}) == -1);
}

TEST_CASE("evaluation") {
  const Polynomial q = Polynomial::monomial(Var::q, 1);
  const Polynomial t = Polynomial::monomial(Var::t, 1);
  const Polynomial p = 3 * q * q * t + q + 1;
  CHECK(p.eval_at(1, 1, 1) == 5);
  CHECK(eval_at(p, 2, 7, 3) == 3 * 4 * 3 + 2 + 1);
  CHECK(p.degree(Var::q) == 2);
  CHECK(p.degree(Var::r) == 0);
  CHECK(Polynomial().degree(Var::q) == -1);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const Polynomial a = random_poly(rng);
    const Polynomial b = random_poly(rng);
    const Polynomial c = random_poly(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == Polynomial());
    REQUIRE(a * 1 == a);
    REQUIRE((a * b).eval_at(2, 3, 5) == a.eval_at(2, 3, 5) * b.eval_at(2, 3, 5));
    const Polynomial ab = a * b;
    for (const auto& [e, coeff] : ab.terms()) REQUIRE(coeff != 0);
  }
}

TEST_CASE("q-integers are palindromic and count at q = 1") {
  for (int k = 1; k <= 20; ++k) {
    const Polynomial p = q_integer(k, Var::q);
    CHECK(p.eval_at(1, 1, 1) == k);
    // q^{k-1} [k]_{1/q} = [k]_q: the coefficient sequence reads the same
    // in reverse.
    const int d = p.degree(Var::q);
    CHECK(d == k - 1);
    for (int e = 0; e <= d; ++e) CHECK(p.coefficient({e, 0, 0}) == p.coefficient({d - e, 0, 0}));
  }
}
