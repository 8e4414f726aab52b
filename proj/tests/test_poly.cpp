#include <catch_amalgamated.hpp>

#include "taycheck/poly.hpp"

using namespace taycheck;

namespace {
// three variables x=0, y=1, z=2 unless stated otherwise
Poly X() { return Poly::variable(3, 0); }
Poly Y() { return Poly::variable(3, 1); }
Poly C(long long v) { return Poly::constant(3, Rational(v)); }
}  // namespace

TEST_CASE("arithmetic basics") {
  Poly p = X() + Y();
  Poly q = X() - Y();
  Poly prod = p * q;
  CHECK(prod == X() * X() - Y() * Y());
  CHECK((p - p).is_zero());
  CHECK(p.pow(2) == X() * X() + C(2) * X() * Y() + Y() * Y());
  CHECK(C(0).is_zero());
  CHECK((p.mul_scalar(Rational(0))).is_zero());
}

TEST_CASE("zero coefficients are never stored") {
  Poly p = X() + Y();
  Poly q = X() - Y();
  Poly s = p + q;  // 2x
  CHECK(s.term_count() == 1);
  CHECK(s.coeff({1, 0, 0}) == 2);
  CHECK(s.coeff({0, 1, 0}) == 0);
}

TEST_CASE("degree and monomial content") {
  Poly p = X().pow(2) * Y() + X().pow(3);
  CHECK(p.degree(0) == 3);
  CHECK(p.degree(1) == 1);
  CHECK(p.degree(2) == 0);
  Mono m = p.min_exponents();
  CHECK(m == Mono{2, 0, 0});
  Poly reduced = p.shift_exponents({-2, 0, 0});
  CHECK(reduced == Y() + X());
}

TEST_CASE("rational content") {
  Poly p = C(1).mul_scalar(Rational(2, 3)) * X() + C(1).mul_scalar(Rational(4, 9)) * Y();
  Rational c = p.content();
  CHECK(c == Rational(2, 9));
}

TEST_CASE("exact division") {
  Poly a = (X() + Y()) * (X() - Y());
  Poly q(3);
  REQUIRE(poly_divide(a, X() + Y(), q));
  CHECK(q == X() - Y());
  CHECK_FALSE(poly_divide(a, X() + C(1), q));
}

TEST_CASE("gcd of univariate polynomials") {
  // (x+1)^2 (x-2) and (x+1)(x+3)
  Poly a = (X() + C(1)).pow(2) * (X() - C(2));
  Poly b = (X() + C(1)) * (X() + C(3));
  Poly g = poly_gcd(a, b);
  CHECK(g == X() + C(1));
}

TEST_CASE("gcd of multivariate polynomials") {
  // common factor (x + y)
  Poly f = (X() + Y()) * (X().pow(2) + Y());
  Poly h = (X() + Y()) * (X() - C(5));
  Poly g = poly_gcd(f, h);
  CHECK(g == X() + Y());
}

TEST_CASE("gcd normalizes sign and content") {
  Poly a = (X() + C(1)).mul_scalar(Rational(-6));
  Poly b = (X() + C(1)).mul_scalar(Rational(4, 3));
  Poly g = poly_gcd(a, b);
  CHECK(g == X() + C(1));
}

TEST_CASE("gcd with zero and coprime inputs") {
  Poly z(3);
  Poly a = X() + C(1);
  CHECK(poly_gcd(z, a) == a);
  CHECK(poly_gcd(a, z) == a);
  Poly one = poly_gcd(X() + C(1), Y() + C(1));
  CHECK(one == C(1));
}

TEST_CASE("gcd handles shared monomial structure across three variables") {
  Poly zv = Poly::variable(3, 2);
  Poly common = X() * Y() + zv;
  Poly a = common * (X() + C(2)) * common;
  Poly b = common * (Y() - C(7));
  CHECK(poly_gcd(a, b) == common);
}
