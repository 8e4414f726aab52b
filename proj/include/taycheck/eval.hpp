#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <map>
#include <string>

#include "taycheck/expr.hpp"

namespace taycheck {

/// Arbitrary-precision real. Precision is carried per value; helpers below
/// work at an explicit decimal-digit count rather than a process-global one.
using Real = boost::multiprecision::mpfr_float;

/// Exact symbol assignments. Keeping bindings rational makes every reported
/// witness reproducible bit for bit.
using Bindings = std::map<std::string, Rational>;

inline constexpr unsigned kDefaultDigits = 30;
inline constexpr unsigned kMinDigits = 15;

/// Scoped default precision. Conversions from exact types and expression
/// template materialization happen at the default precision, so any code
/// mixing Real with Rational at elevated precision should hold one of these.
struct PrecisionScope {
  unsigned saved;
  explicit PrecisionScope(unsigned digits) : saved(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;
};

/// Evaluate at `digits` decimal digits of working precision (floored at
/// kMinDigits, plus guard digits internally). Throws UnboundSymbol for free
/// symbols absent from the bindings and PoleEvaluation when a negative power
/// meets an exact zero base. Operator nodes must be resolved away first.
Real eval(const Expr& e, const Bindings& bindings, unsigned digits = kDefaultDigits);

double eval_double(const Expr& e, const Bindings& bindings);

/// Format with `sig` significant digits in scientific notation, e.g.
/// "5.3727551e-02". Deterministic across platforms.
std::string real_str(const Real& v, unsigned sig = 17);

}  // namespace taycheck
