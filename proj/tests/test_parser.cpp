#include <catch_amalgamated.hpp>

#include "taycheck/errors.hpp"
#include "taycheck/parser.hpp"
#include "taycheck/problem.hpp"

using namespace taycheck;

TEST_CASE("expression parsing and precedence") {
  CHECK(struct_equal(parse_expr("2+3*4"), Expr::integer(14)));
  CHECK(struct_equal(parse_expr("(2+3)*4"), Expr::integer(20)));
  CHECK(struct_equal(parse_expr("2^3"), Expr::integer(8)));
  CHECK(struct_equal(parse_expr("-2^2"), Expr::integer(-4)));  // unary minus binds looser than ^
  CHECK(struct_equal(parse_expr("x^-2"), Expr::pow(Expr::symbol("x"), -2)));
  CHECK(struct_equal(parse_expr("1/2"), Expr::constant(Rational(1, 2))));
  CHECK(struct_equal(parse_expr("0.25"), Expr::constant(Rational(1, 4))));
  CHECK(struct_equal(parse_expr("x - y - z"),
                     simplify(Expr::symbol("x") - Expr::symbol("y") - Expr::symbol("z"))));
  CHECK(struct_equal(parse_expr("6/2/3"), Expr::integer(1)));
}

TEST_CASE("functions and operators parse") {
  Expr e = parse_expr("exp(-k*x)/(1+exp(-k*x/2))^2");
  CHECK(free_symbols(e) == std::set<std::string>{"k", "x"});
  CHECK(struct_equal(parse_expr("shift(u,-1)"), Expr::shift(Expr::symbol("u"), -1)));
  CHECK(struct_equal(parse_expr("shift(u, 2)"), Expr::shift(Expr::symbol("u"), 2)));
  CHECK(struct_equal(parse_expr("dxx(u) + dx(u)"),
                     simplify(Expr::dxx(Expr::symbol("u")) + Expr::dx(Expr::symbol("u")))));
  CHECK(struct_equal(parse_expr("tanh(k)^2"), Expr::pow(Expr::tanh(Expr::symbol("k")), 2)));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_expr("1 + ");
    FAIL("expected SourceError");
  } catch (const SourceError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 5);
  }
  try {
    parse_expr("foo(x)", 7, 10);
    FAIL("expected SourceError");
  } catch (const SourceError& e) {
    CHECK(e.line == 7);
    CHECK(e.col == 11);
    CHECK(e.token == "foo");
  }
  CHECK_THROWS_AS(parse_expr("x +* y"), SourceError);
  CHECK_THROWS_AS(parse_expr("x^y"), SourceError);  // exponents are integer literals
  CHECK_THROWS_AS(parse_expr("(x"), SourceError);
  CHECK_THROWS_AS(parse_expr("x)"), SourceError);
}

TEST_CASE("round trip through the printer") {
  const char* cases[] = {
      "x + 2*y",
      "exp(-k*x)/(1+exp(-k*x/2))^2",
      "tanh(k*n+c)^2",
      "1/(1+exp(x/2))",
      "x^3 - 1/2*x + 3/4",
      "sech(k)^2*tanh(k)",
      "shift(u,1) - shift(u,-1)",
  };
  for (const char* c : cases) {
    Expr e = parse_expr(c);
    Expr back = parse_expr(to_string(e));
    INFO(c << "  ->  " << to_string(e));
    CHECK(struct_equal(e, back));
  }
}

static const char* kProblemText = R"(
# two-field reaction-diffusion system
[problem]
kind = pde
space = x
fields = u, v
params = k

[equations]
dt(u) = u*(1 - u - v) + dxx(u)
dt(v) = dxx(v) - u*v

[initial]
u = exp(-k*x)/(1+exp(-k*x/2))^2
v = 1/(1+exp(-k*x/2))

[claim.wave]
params = c
let z = x + c*t
u = exp(k*z)/(1+exp(k*z/2))^2
v = 1/(1+exp(k*z/2))
)";

TEST_CASE("problem files parse into validated specs") {
  ProblemSpec spec = parse_problem(kProblemText);
  CHECK(spec.kind == ProblemKind::Pde);
  CHECK(spec.space == "x");
  CHECK(spec.fields == std::vector<std::string>{"u", "v"});
  CHECK(spec.params == std::vector<std::string>{"k"});
  REQUIRE(spec.claims.size() == 1);
  const Claim& c = spec.claims[0];
  CHECK(c.name == "wave");
  CHECK(c.extra_params == std::vector<std::string>{"c"});
  // let z was eliminated: claim expressions depend on x, t, c, k only
  auto fs = free_symbols(c.solutions.at("u"));
  CHECK(fs == std::set<std::string>{"c", "k", "t", "x"});
  CHECK(find_claim(spec, "wave") == &spec.claims[0]);
  CHECK(find_claim(spec, "nope") == nullptr);
}

TEST_CASE("validation rejects malformed problems") {
  // t in an equation right-hand side
  CHECK_THROWS_AS(parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = t*u
[initial]
u = x
)"),
                  ValidationError);
  // shift in a pde
  CHECK_THROWS_AS(parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = shift(u,1)
[initial]
u = x
)"),
                  ValidationError);
  // dx on a lattice
  CHECK_THROWS_AS(parse_problem(R"(
[problem]
kind = dde
space = n
fields = u
[equations]
dt(u) = dx(u)
[initial]
u = n
)"),
                  ValidationError);
  // missing initial profile
  CHECK_THROWS_AS(parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = dxx(u)
)"),
                  ValidationError);
  // undeclared symbol
  CHECK_THROWS_AS(parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = a*dxx(u)
[initial]
u = x
)"),
                  ValidationError);
  // two fields on a lattice
  CHECK_THROWS_AS(parse_problem(R"(
[problem]
kind = dde
space = n
fields = u, w
[equations]
dt(u) = shift(u,1)
dt(w) = shift(w,1)
[initial]
u = n
w = n
)"),
                  ValidationError);
}

TEST_CASE("claim equations see t but equations do not") {
  ProblemSpec spec = parse_problem(R"(
[problem]
kind = dde
space = n
fields = u
params = alpha
[equations]
dt(u) = alpha*(shift(u,1) - shift(u,-1))
[initial]
u = n
[claim.linear]
u = n + 2*alpha*t
)");
  CHECK(depends_on(spec.claims[0].solutions.at("u"), "t"));
}
