#pragma once

#include <map>
#include <string>
#include <vector>

#include "taycheck/eval.hpp"
#include "taycheck/expr.hpp"
#include "taycheck/problem.hpp"

namespace taycheck {

/// Truncated Taylor expansion in t about t = 0. coeffs[j] multiplies t^j and
/// is a canonical Expr in the space symbol and parameters; coeffs.front() is
/// the initial profile verbatim.
struct TimeSeries {
  std::string field;
  ProblemKind kind;
  std::string space;
  std::vector<Expr> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct SeriesOptions {
  std::size_t node_budget = 200000;  // per coefficient, in tree nodes
};

/// Direct recursion c_{j+1} = [t^j] RHS(series) / (j+1), one pass per order.
/// Throws OrderOverflow when a coefficient exceeds the node budget and
/// DegenerateExpression when a series inverse meets a zero constant term.
std::map<std::string, TimeSeries> pde_taylor(const ProblemSpec& spec, int order,
                                             const SeriesOptions& opt = {});

/// Lattice counterpart; the spec carries exactly one field.
TimeSeries dde_taylor(const ProblemSpec& spec, int order, const SeriesOptions& opt = {});

/// Shared engine behind both entry points.
std::map<std::string, TimeSeries> taylor_expand(const ProblemSpec& spec, int order,
                                                const SeriesOptions& opt = {});

/// Numeric value of the truncated series at one point.
Real series_eval(const TimeSeries& ts, const Rational& space_value, const Rational& t,
                 const Bindings& params, unsigned digits = kDefaultDigits);

/// The series as a single expression in space, t, and parameters.
Expr series_as_expr(const TimeSeries& ts);

/// Defect of the truncated series in its own equation: the residual
/// dt(series) - RHS(series) as an expression in space, t, parameters.
Expr series_defect(const ProblemSpec& spec, const std::map<std::string, TimeSeries>& series,
                   const std::string& field);

/// Taylor coefficients (in t, about 0) of the defect, orders 0..upto.
/// For an order-N series the first N of these vanish identically.
std::vector<Expr> defect_coefficients(const ProblemSpec& spec,
                                      const std::map<std::string, TimeSeries>& series,
                                      const std::string& field, int upto);

struct ResidualOrderResult {
  bool exact = false;  // every sampled residual was zero to precision
  double slope = 0.0;  // least-squares d log(residual) / d log(t)
  std::vector<std::pair<double, double>> samples;  // (t, max abs residual)
};

/// Measures how fast the worst-field residual decays as t -> 0. An order-N
/// truncation shows slope close to N (the leading surviving defect term).
ResidualOrderResult residual_order(const ProblemSpec& spec,
                                   const std::map<std::string, TimeSeries>& series,
                                   const std::vector<Rational>& t_samples,
                                   const std::vector<Rational>& space_samples,
                                   const Bindings& params, unsigned digits = kDefaultDigits);

}  // namespace taycheck
