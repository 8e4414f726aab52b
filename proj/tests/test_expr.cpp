#include <catch_amalgamated.hpp>

#include "taycheck/errors.hpp"
#include "taycheck/expr.hpp"

using namespace taycheck;

namespace {
Expr sym(const char* n) { return Expr::symbol(n); }
Expr num(long long v) { return Expr::integer(v); }
Expr frac(long long p, long long q) { return Expr::constant(Rational(p, q)); }
}  // namespace

TEST_CASE("constant folding") {
  CHECK(struct_equal(simplify(num(2) + num(3)), num(5)));
  CHECK(struct_equal(simplify(frac(1, 2) * frac(2, 3)), frac(1, 3)));
  CHECK(struct_equal(simplify(Expr::pow(frac(2, 3), -2)), frac(9, 4)));
  CHECK(struct_equal(simplify(Expr::pow(num(0), 0)), num(1)));
  CHECK_THROWS_AS(simplify(Expr::pow(num(0), -1)), DegenerateExpression);
  CHECK_THROWS_AS(simplify(sym("x") / num(0)), DegenerateExpression);
}

TEST_CASE("like terms merge") {
  Expr x = sym("x");
  // 2x + 3x -> 5x
  Expr e = simplify(num(2) * x + num(3) * x);
  CHECK(struct_equal(e, simplify(num(5) * x)));
  // x - x -> 0
  CHECK(struct_equal(simplify(x - x), num(0)));
  // x*x -> x^2, x^2 * x^-2 -> 1
  CHECK(struct_equal(simplify(x * x), Expr::pow(x, 2)));
  CHECK(struct_equal(simplify(Expr::pow(x, 2) * Expr::pow(x, -2)), num(1)));
}

TEST_CASE("canonical ordering is stable") {
  Expr x = sym("x"), y = sym("y");
  Expr a = simplify(x + y);
  Expr b = simplify(y + x);
  CHECK(struct_equal(a, b));
  CHECK(struct_equal(simplify(x * y), simplify(y * x)));
  // constants sort first
  Expr s = simplify(x + num(1));
  REQUIRE(s.kind() == Kind::Sum);
  CHECK(s.child(0).is_const(1));
}

TEST_CASE("sum collection flattens coefficient-one sums") {
  Expr x = sym("x"), y = sym("y");
  Expr half_block = frac(1, 2) * (x + y);
  Expr e = simplify(half_block + half_block);
  CHECK(struct_equal(e, simplify(x + y)));
}

TEST_CASE("pow distributes over products and nests") {
  Expr x = sym("x");
  Expr e = simplify(Expr::pow(num(2) * x, 3));
  CHECK(struct_equal(e, simplify(num(8) * Expr::pow(x, 3))));
  Expr n = simplify(Expr::pow(Expr::pow(x, 2), -3));
  CHECK(struct_equal(n, Expr::pow(x, -6)));
}

TEST_CASE("zero annihilates products, identities fold") {
  Expr x = sym("x");
  CHECK(struct_equal(simplify(num(0) * Expr::pow(x, -1)), num(0)));
  CHECK(struct_equal(simplify(num(1) * x), x));
  CHECK(struct_equal(simplify(x + num(0)), x));
  CHECK(struct_equal(simplify(Expr::exp(num(0))), num(1)));
  CHECK(struct_equal(simplify(Expr::tanh(num(0))), num(0)));
  CHECK(struct_equal(simplify(Expr::sech(num(0))), num(1)));
  CHECK(struct_equal(simplify(Expr::shift(x, 0)), x));
}

TEST_CASE("differentiate basics") {
  Expr x = sym("x");
  CHECK(struct_equal(differentiate(Expr::pow(x, 3), "x"), simplify(num(3) * Expr::pow(x, 2))));
  CHECK(struct_equal(differentiate(Expr::exp(num(2) * x), "x"),
                     simplify(num(2) * Expr::exp(num(2) * x))));
  CHECK(struct_equal(differentiate(Expr::tanh(x), "x"), Expr::pow(Expr::sech(x), 2)));
  CHECK(struct_equal(differentiate(sym("y"), "x"), num(0)));
  // product rule: d(x*exp(x)) = exp(x) + x*exp(x)
  Expr d = differentiate(x * Expr::exp(x), "x");
  CHECK(struct_equal(d, simplify(Expr::exp(x) + x * Expr::exp(x))));
}

TEST_CASE("substitute replaces and canonicalizes") {
  Expr x = sym("x"), t = sym("t");
  Expr e = Expr::pow(x, 2) + x;
  CHECK(struct_equal(substitute(e, "x", num(3)), num(12)));
  Expr moved = substitute(sym("n"), "n", simplify(sym("n") + num(1)));
  CHECK(struct_equal(moved, simplify(sym("n") + num(1))));
  CHECK(struct_equal(substitute(t, "x", num(5)), t));
}

TEST_CASE("resolve_operators") {
  Expr u = Expr::exp(num(2) * sym("x"));
  CHECK(struct_equal(simplify(resolve_operators(Expr::dx(u), "x")), simplify(num(2) * u)));
  CHECK(struct_equal(simplify(resolve_operators(Expr::dxx(u), "x")), simplify(num(4) * u)));
  Expr s = resolve_operators(Expr::shift(Expr::pow(sym("n"), 2), -1), "n");
  CHECK(struct_equal(simplify(s), simplify(Expr::pow(sym("n") - num(1), 2))));
  CHECK_THROWS_AS(differentiate(Expr::dx(sym("x")), "x"), UnresolvedOperator);
}

TEST_CASE("free symbols and node helpers") {
  Expr e = simplify(sym("x") * Expr::exp(sym("k") * sym("x")) + sym("t"));
  auto fs = free_symbols(e);
  CHECK(fs == std::set<std::string>{"k", "t", "x"});
  CHECK(contains_kind(e, Kind::Exp));
  CHECK_FALSE(contains_kind(e, Kind::Shift));
  CHECK(depends_on(e, "k"));
  CHECK_FALSE(depends_on(e, "z"));
  CHECK(e.nodes() > 5);
}

TEST_CASE("printer round structure") {
  Expr x = sym("x");
  CHECK(to_string(simplify(num(2) * x)) == "2*x");
  CHECK(to_string(simplify(x - sym("y"))) == "x - y");
  CHECK(to_string(simplify(Expr::pow(x, -1))) == "1/x");
  CHECK(to_string(frac(-3, 4)) == "-3/4");
  CHECK(to_string(simplify(Expr::exp(-x))) == "exp(-x)");
  CHECK(to_string(Expr::shift(sym("u"), -2)) == "shift(u,-2)");
}
