#include <catch_amalgamated.hpp>

#include "taycheck/errors.hpp"
#include "taycheck/expform.hpp"
#include "taycheck/parser.hpp"
#include "taycheck/series.hpp"

using namespace taycheck;

namespace {

ProblemSpec rd_system() {
  return parse_problem(R"(
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
)");
}

Rational rat(long long p, long long q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("constant-coefficient heat equation reproduces the closed form") {
  ProblemSpec spec = parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = dxx(u)
[initial]
u = exp(x)
)");
  auto series = pde_taylor(spec, 6);
  const TimeSeries& u = series.at("u");
  REQUIRE(u.order() == 6);
  Rational fact(1);
  for (int j = 0; j <= 6; ++j) {
    if (j > 0) fact *= j;
    Expr expect = simplify(Expr::product({Expr::constant(Rational(1) / fact), Expr::exp(Expr::symbol("x"))}));
    CHECK(struct_equal(u.coeffs[j], expect));
  }
}

TEST_CASE("plain growth equation gives the exponential series") {
  ProblemSpec spec = parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = u
[initial]
u = 1
)");
  auto series = pde_taylor(spec, 6);
  Rational fact(1);
  for (int j = 0; j <= 6; ++j) {
    if (j > 0) fact *= j;
    CHECK(struct_equal(series.at("u").coeffs[j], Expr::constant(Rational(1) / fact)));
  }
}

TEST_CASE("zeroth coefficient is the initial profile verbatim") {
  ProblemSpec spec = rd_system();
  auto series = pde_taylor(spec, 0);
  CHECK(struct_equal(series.at("u").coeffs[0], simplify(spec.init.at("u"))));
  CHECK(struct_equal(series.at("v").coeffs[0], simplify(spec.init.at("v"))));
}

TEST_CASE("reaction-diffusion coefficients at the origin") {
  PrecisionScope prec(60);
  ProblemSpec spec = rd_system();
  auto series = pde_taylor(spec, 4);
  Bindings k1{{"k", rat(1)}};

  // frozen rational values of c_j(x=0) at k=1
  const Rational u_expect[] = {rat(1, 4), rat(3, 32), rat(1, 128), rat(11, 6144), rat(-31, 24576)};
  const Rational v_expect[] = {rat(1, 2), rat(-1, 8), rat(0), rat(1, 256), rat(-17, 12288)};
  for (int j = 0; j <= 4; ++j) {
    Bindings b = k1;
    b["x"] = rat(0);
    Real uj = eval(series.at("u").coeffs[j], b, 40);
    Real vj = eval(series.at("v").coeffs[j], b, 40);
    CHECK(abs(uj - Real(u_expect[j], 50)) < Real("1e-35", 50));
    CHECK(abs(vj - Real(v_expect[j], 50)) < Real("1e-35", 50));
  }

  // first-order u coefficient equals its hand-derived closed form at k=1:
  // c_u1 = A^2 (A+2) / (2 (A+1)^4),  A = exp(-x/2)
  Expr c1 = substitute(series.at("u").coeffs[1], "k", Expr::integer(1));
  Expr a = Expr::exp(parse_expr("-x/2"));
  Expr closed = parse_expr("exp(-x/2)^2*(exp(-x/2)+2)/(2*(exp(-x/2)+1)^4)");
  CHECK(is_zero(simplify(c1 - closed)).state == ZeroState::ProvenZero);
  (void)a;
}

TEST_CASE("lattice recursion matches the telescoping example") {
  ProblemSpec spec = parse_problem(R"(
[problem]
kind = dde
space = n
fields = u
[equations]
dt(u) = shift(u,1) - shift(u,-1)
[initial]
u = n
)");
  TimeSeries u = dde_taylor(spec, 3);
  CHECK(struct_equal(u.coeffs[0], Expr::symbol("n")));
  CHECK(struct_equal(u.coeffs[1], Expr::integer(2)));
  CHECK(struct_equal(u.coeffs[2], Expr::integer(0)));
  CHECK(struct_equal(u.coeffs[3], Expr::integer(0)));
}

TEST_CASE("pde and dde recursions agree on operator-free systems") {
  const char* tmpl = R"(
[problem]
kind = %KIND%
space = n
fields = u
[equations]
dt(u) = u*(1 - u)
[initial]
u = 1/(1+exp(-n))
)";
  std::string pde_text(tmpl), dde_text(tmpl);
  pde_text.replace(pde_text.find("%KIND%"), 6, "pde");
  dde_text.replace(dde_text.find("%KIND%"), 6, "dde");
  auto ps = taylor_expand(parse_problem(pde_text), 4);
  auto ds = taylor_expand(parse_problem(dde_text), 4);
  for (int j = 0; j <= 4; ++j)
    CHECK(struct_equal(ps.at("u").coeffs[j], ds.at("u").coeffs[j]));
}

TEST_CASE("series_eval agrees with evaluating the assembled expression") {
  PrecisionScope prec(60);
  ProblemSpec spec = rd_system();
  auto series = pde_taylor(spec, 3);
  Bindings params{{"k", rat(1)}};
  Real direct = series_eval(series.at("u"), rat(1, 2), rat(1, 10), params, 40);
  Bindings full = params;
  full["x"] = rat(1, 2);
  full["t"] = rat(1, 10);
  Real via = eval(series_as_expr(series.at("u")), full, 40);
  CHECK(abs(direct - via) < Real("1e-35", 50));
}

TEST_CASE("defect coefficients below the truncation order vanish identically") {
  ProblemSpec spec = rd_system();
  auto series = pde_taylor(spec, 3);
  for (const char* f : {"u", "v"}) {
    auto cs = defect_coefficients(spec, series, f, 2);
    for (const Expr& c : cs) {
      ZeroVerdict v = is_zero(c);
      INFO("field " << f);
      CHECK(v.state == ZeroState::ProvenZero);
    }
  }
}

TEST_CASE("residual decays at the truncation order") {
  ProblemSpec spec = parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = u
[initial]
u = 1
)");
  auto series = pde_taylor(spec, 6);
  auto r = residual_order(spec, series, {rat(1, 1000), rat(1, 100), rat(1, 10)}, {rat(0)}, {});
  CHECK_FALSE(r.exact);
  CHECK(r.slope == Catch::Approx(6.0).margin(0.05));
}

TEST_CASE("polynomial exact solutions give exact residuals") {
  ProblemSpec spec = parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = dx(u)
[initial]
u = x
)");
  auto series = pde_taylor(spec, 3);
  CHECK(struct_equal(series.at("u").coeffs[1], Expr::integer(1)));
  CHECK(struct_equal(series.at("u").coeffs[2], Expr::integer(0)));
  auto r = residual_order(spec, series, {rat(1, 100), rat(1, 10), rat(1)}, {rat(1), rat(2)}, {});
  CHECK(r.exact);
}

TEST_CASE("node budget aborts runaway expansions") {
  ProblemSpec spec = rd_system();
  SeriesOptions opt;
  opt.node_budget = 40;
  CHECK_THROWS_AS(pde_taylor(spec, 3, opt), OrderOverflow);
}

TEST_CASE("series inverse refuses a literal zero head") {
  ProblemSpec spec = parse_problem(R"(
[problem]
kind = pde
space = x
fields = u
[equations]
dt(u) = 1/u
[initial]
u = 0
)");
  CHECK_THROWS_AS(pde_taylor(spec, 2), DegenerateExpression);
}
