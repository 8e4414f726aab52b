#include <catch_amalgamated.hpp>

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <vector>

#include "taycheck/errors.hpp"
#include "taycheck/eval.hpp"
#include "taycheck/expform.hpp"
#include "taycheck/parser.hpp"
#include "taycheck/rational.hpp"

using namespace taycheck;

namespace {

// Depth-bounded random expressions over x and y, covering every node kind
// the simplifier handles. Same seeds, same trees, on every platform.
Expr random_expr(SplitMix64& rng, int depth) {
  if (depth == 0) {
    switch (rng.below(4)) {
      case 0: return Expr::symbol("x");
      case 1: return Expr::symbol("y");
      case 2: return Expr::integer(static_cast<long long>(rng.below(9)) - 4);
      default:
        return Expr::constant(Rational(static_cast<long long>(rng.below(9)) - 4,
                                       static_cast<long long>(rng.below(4)) + 1));
    }
  }
  switch (rng.below(9)) {
    case 0:
      return Expr::sum({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 1:
      return Expr::sum({random_expr(rng, depth - 1), random_expr(rng, depth - 1),
                        random_expr(rng, depth - 1)});
    case 2:
      return Expr::product({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 3:
      return Expr::pow(random_expr(rng, depth - 1), static_cast<long long>(rng.below(7)) - 3);
    case 4: return Expr::exp(random_expr(rng, depth - 1));
    case 5: return Expr::tanh(random_expr(rng, depth - 1));
    case 6: return Expr::sech(random_expr(rng, depth - 1));
    case 7: return Expr::cosh(random_expr(rng, depth - 1));
    default: return Expr::sinh(random_expr(rng, depth - 1));
  }
}

Rational random_point(SplitMix64& rng) {
  long long num = static_cast<long long>(rng.below(33)) - 16;  // -16..16
  long long den = static_cast<long long>(rng.below(8)) + 1;    // 1..8
  return Rational(num, den * 4);                               // within [-4, 4]
}

bool small(const Real& v, double bound) { return v < Real(bound); }

}  // namespace

TEST_CASE("simplify is idempotent on random expressions") {
  SplitMix64 rng(0x51u);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Expr e = random_expr(rng, 4);
    Expr once;
    try {
      once = simplify(e);
    } catch (const DegenerateExpression&) {
      continue;  // raw tree encoded a division by literal zero
    }
    Expr twice = simplify(once);
    INFO("expr: " << to_string(e));
    REQUIRE(struct_equal(once, twice));
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("printed canonical forms parse back to themselves") {
  SplitMix64 rng(0x9eu);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Expr canonical;
    try {
      canonical = simplify(random_expr(rng, 4));
    } catch (const DegenerateExpression&) {
      continue;
    }
    Expr back = parse_expr(to_string(canonical));
    INFO("printed: " << to_string(canonical));
    REQUIRE(struct_equal(back, canonical));
    ++checked;
  }
  CHECK(checked > 360);
}

TEST_CASE("symbolic derivative agrees with central differences") {
  SplitMix64 rng(0xd1fu);
  const unsigned digits = 50;
  PrecisionScope prec(digits + 10);
  const Rational h(1, 10000000000LL);  // 1e-10, exact
  int checked = 0;
  for (int attempt = 0; attempt < 5000 && checked < 500; ++attempt) {
    Expr e;
    try {
      e = simplify(random_expr(rng, 3));
    } catch (const DegenerateExpression&) {
      continue;
    }
    if (!depends_on(e, "x")) continue;
    Bindings at{{"x", random_point(rng)}, {"y", random_point(rng)}};
    Bindings lo = at, hi = at;
    lo["x"] -= h;
    hi["x"] += h;
    Real f0, fl, fh, exact;
    try {
      Expr d = differentiate(e, "x");
      f0 = eval(e, at, digits);
      fl = eval(e, lo, digits);
      fh = eval(e, hi, digits);
      exact = eval(d, at, digits);
    } catch (const EngineError&) {
      continue;  // pole or degenerate power at this point
    }
    using boost::multiprecision::abs;
    using boost::multiprecision::isfinite;
    if (!isfinite(f0) || !isfinite(fl) || !isfinite(fh) || !isfinite(exact)) continue;
    // wild third derivatives make the h^2 remainder swamp the comparison
    if (!small(abs(f0), 1e8) || !small(abs(exact), 1e8)) continue;
    const Real fd = (fh - fl) / (Real(h, digits) * 2);
    const Real scale = abs(exact) < 1 ? Real(1) : abs(exact);
    INFO("expr: " << to_string(e) << " at x = " << rational_str(at["x"])
                  << ", y = " << rational_str(at["y"]));
    REQUIRE(small(abs(fd - exact) / scale, 1e-6));
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("hyperbolic identities prove zero with compound arguments") {
  const Expr x = Expr::symbol("x");
  const Expr y = Expr::symbol("y");
  const std::vector<Expr> args{
      x,
      x + y * y,
      Expr::exp(x) + Expr::constant(Rational(1, 3)),
      x * y - Expr::integer(2),
  };
  for (const Expr& z : args) {
    INFO("argument: " << to_string(z));
    Expr tanh_sech = Expr::pow(Expr::tanh(z), 2) + Expr::pow(Expr::sech(z), 2) - Expr::integer(1);
    Expr cosh_sinh = Expr::pow(Expr::cosh(z), 2) - Expr::pow(Expr::sinh(z), 2) - Expr::integer(1);
    Expr quotient = Expr::sinh(z) - Expr::tanh(z) * Expr::cosh(z);
    CHECK(is_zero(tanh_sech).state == ZeroState::ProvenZero);
    CHECK(is_zero(cosh_sinh).state == ZeroState::ProvenZero);
    CHECK(is_zero(quotient).state == ZeroState::ProvenZero);
  }
}

TEST_CASE("zero decisions are sound under independent sampling") {
  SplitMix64 rng(0xace5u);
  int proven_zero = 0, proven_nonzero = 0;
  for (int i = 0; i < 200; ++i) {
    Expr e;
    Expr parts;  // magnitude of the pieces a zero was assembled from
    try {
      Expr raw = random_expr(rng, 3);
      // half the stream: guaranteed zeros, built as a difference of equals
      if (i % 2 == 0) {
        Expr square = simplify(Expr::pow(raw + Expr::integer(1), 2));
        Expr expanded =
            Expr::pow(raw, 2) + Expr::integer(2) * raw + Expr::integer(1);
        e = square - expanded;
        parts = square;
      } else {
        e = simplify(raw);
        parts = e;
      }
    } catch (const DegenerateExpression&) {
      continue;
    }

    ZeroVerdict v;
    try {
      v = is_zero(e);
    } catch (const EngineError&) {
      continue;  // merge failure or degenerate form; soundness is about verdicts
    }

    if (v.state == ZeroState::ProvenZero) {
      ++proven_zero;
      for (int s = 0; s < 20; ++s) {
        Bindings b{{"x", random_point(rng)}, {"y", random_point(rng)}};
        try {
          using boost::multiprecision::abs;
          // cancellation in the replay: 40-digit eval of a difference of
          // huge equals leaves noise ~ magnitude * 1e-40, so cap the scale
          Real mag = eval(parts, b, 40);
          if (!boost::multiprecision::isfinite(mag) || !small(abs(mag), 1e15)) continue;
          Real value = eval(e, b, 40);
          INFO("claimed zero: " << to_string(e) << " at x = " << rational_str(b["x"])
                                << ", y = " << rational_str(b["y"]));
          if (boost::multiprecision::isfinite(value)) REQUIRE(small(abs(value), 1e-6));
        } catch (const PoleEvaluation&) {
        } catch (const DegenerateExpression&) {
        }
      }
    } else if (v.state == ZeroState::ProvenNonZero) {
      ++proven_nonzero;
      REQUIRE(v.witness.has_value());
      Real replay = eval(e, v.witness->bindings, 40);
      using boost::multiprecision::abs;
      INFO("witnessed: " << to_string(e));
      if (boost::multiprecision::isfinite(replay)) REQUIRE(abs(replay) > Real(1e-7));
    }
  }
  // the stream must actually exercise both verdicts
  CHECK(proven_zero > 50);
  CHECK(proven_nonzero > 50);
}
