#include "hilbdim/arith.hpp"
#include "hilbdim/polynomial.hpp"

#include <doctest.h>

using namespace hilbdim;

TEST_CASE("binomial and ceil_div") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 6) == 7);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(40, 20) == Integer("137846528820"));
  CHECK(ceil_div(3, 2) == 2);
  CHECK(ceil_div(4, 2) == 2);
  CHECK(ceil_div(-3, 2) == -1);
}

TEST_CASE("rational formatting and integrality") {
  CHECK(to_string(Rational(7, 6)) == "7/6");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(is_integral(Rational(6, 3)));
  CHECK(require_integral(Rational(10, 5), "x") == 2);
  CHECK_THROWS_AS(require_integral(Rational(1, 3), "x"), NonIntegral);
  CHECK_THROWS_AS(require_integral<NonIntegralDim>(Rational(1, 2), "dim"), NonIntegralDim);
}

TEST_CASE("polynomial binomials agree with integer binomials") {
  for (long long shift = -3; shift <= 3; ++shift) {
    const auto p = RationalPolynomial::binomial(shift, 6);
    CHECK(p.degree() == 6);
    for (long long s = 0; s <= 12; ++s) {
      const long long top = s + shift;
      // C(top, 6) as a polynomial vanishes at top = 0..5 and agrees with the count above.
      if (top >= 0) CHECK(p(Rational(s)) == Rational(binomial(top, 6)));
    }
  }
}

TEST_CASE("polynomial arithmetic and printing") {
  RationalPolynomial p = RationalPolynomial::linear(1) * RationalPolynomial::linear(-1);
  CHECK(p.str() == "t^2 - 1");
  p += RationalPolynomial::constant(Rational(1));
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(0) == 0);
  p = p - p;
  CHECK(p.degree() == -1);
  RationalPolynomial q = RationalPolynomial::constant(Rational(7, 6)) * RationalPolynomial::linear(0) *
                         RationalPolynomial::linear(0) * RationalPolynomial::linear(0);
  CHECK(q.leading() == Rational(7, 6));
  CHECK(q(Rational(6)) == 252);
}
