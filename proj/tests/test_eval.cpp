#include <catch_amalgamated.hpp>

#include "taycheck/errors.hpp"
#include "taycheck/eval.hpp"

using namespace taycheck;

namespace {
Expr sym(const char* n) { return Expr::symbol(n); }
Expr num(long long v) { return Expr::integer(v); }
}  // namespace

TEST_CASE("rational constants evaluate exactly") {
  Bindings b;
  Real v = eval(Expr::constant(Rational(1, 3)), b, 40);
  Real third = Real(1, 50) / Real(3, 50);
  CHECK(abs(v - third) < Real("1e-38", 50));
}

TEST_CASE("bound symbols and arithmetic") {
  Bindings b{{"x", Rational(3, 2)}};
  CHECK(eval_double(simplify(sym("x") * sym("x")), b) == Catch::Approx(2.25));
  CHECK(eval_double(Expr::pow(sym("x"), -2), b) == Catch::Approx(4.0 / 9.0));
  CHECK_THROWS_AS(eval(sym("y"), b), UnboundSymbol);
}

TEST_CASE("pole detection") {
  Bindings b{{"x", Rational(1)}};
  Expr e = Expr::pow(simplify(sym("x") - num(1)), -1);
  CHECK_THROWS_AS(eval(e, b), PoleEvaluation);
}

TEST_CASE("hyperbolics against known values") {
  Bindings b{{"x", Rational(1)}};
  CHECK(eval_double(Expr::tanh(sym("x")), b) == Catch::Approx(0.7615941559557649));
  CHECK(eval_double(Expr::sech(sym("x")), b) == Catch::Approx(0.6480542736638855));
  CHECK(eval_double(Expr::cosh(sym("x")), b) == Catch::Approx(1.5430806348152437));
  CHECK(eval_double(Expr::sinh(sym("x")), b) == Catch::Approx(1.1752011936438014));
  CHECK(eval_double(Expr::exp(sym("x")), b) == Catch::Approx(2.718281828459045));
}

TEST_CASE("precision actually increases with digits") {
  // tanh(1/2) to 60 digits vs 20 digits: both must match a reference prefix
  Bindings b;
  Expr e = Expr::tanh(Expr::constant(Rational(1, 2)));
  Real lo = eval(e, b, 20);
  Real hi = eval(e, b, 60);
  // reference: tanh(0.5) = 0.46211715726000975850231848364367254873028928033011303855273182...
  Real ref("0.4621171572600097585023184836436725487302892803301130385527318", 70);
  CHECK(abs(hi - ref) < Real("1e-55", 70));
  CHECK(abs(lo - ref) < Real("1e-18", 70));
}

TEST_CASE("operator nodes refuse to evaluate") {
  Bindings b{{"x", Rational(0)}};
  CHECK_THROWS_AS(eval(Expr::dx(sym("x")), b), UnresolvedOperator);
  CHECK_THROWS_AS(eval(Expr::shift(sym("x"), 1), b), UnresolvedOperator);
}

TEST_CASE("real_str formats deterministically") {
  Real v = eval(Expr::tanh(Expr::constant(Rational(1, 2))), Bindings{}, 30);
  std::string s = real_str(v, 10);
  CHECK(s.substr(0, 11) == "4.621171573");
}
