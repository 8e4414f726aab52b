#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taycheck/expform.hpp"
#include "taycheck/problem.hpp"
#include "taycheck/sampling.hpp"

namespace taycheck {

enum class ClaimStatus { Satisfied, Violated, Inconclusive };

std::string to_string(ClaimStatus s);
std::string to_string(ZeroState s);

/// Result of testing one residual or deviation expression: the zero verdict
/// plus the worst sample seen on the direct evaluation route. `worst` is
/// absent when every sample hit a pole.
struct ExprCheck {
  std::string field;
  Expr expr;
  ZeroVerdict verdict;
  std::optional<Witness> worst;
  int samples_evaluated = 0;
  int poles_skipped = 0;
};

struct ClaimReport {
  std::string claim;
  ClaimStatus status = ClaimStatus::Inconclusive;
  std::vector<ExprCheck> equations;           // dt(field) - rhs, claim substituted
  std::vector<ExprCheck> initial_conditions;  // claim at t=0 minus initial profile
  unsigned precision = kDefaultDigits;
  std::uint64_t seed = kDefaultSeed;
};

/// The claim's residual in one evolution equation: dt of the claimed
/// solution minus the right-hand side with every field replaced by its
/// claimed expression and dx/dxx/shift resolved. Canonical form.
Expr claim_residual(const ProblemSpec& spec, const Claim& claim, const std::string& field);

/// The claimed solution at t = 0 minus the declared initial profile.
Expr claim_ic_deviation(const ProblemSpec& spec, const Claim& claim, const std::string& field);

/// Substitute the claim into every equation and initial condition, decide
/// each residual with is_zero_over on the plan's samples, and aggregate:
/// Satisfied only when every verdict is ProvenZero (so never from sampling
/// alone), Violated when any verdict is ProvenNonZero, else Inconclusive.
ClaimReport check_claim(const ProblemSpec& spec, const Claim& claim, const SamplePlan& plan);

struct ScanRow {
  Rational value;
  Real max_residual;                          // worst over equations and samples
  std::map<std::string, Real> ic_deviation;   // per field, worst over samples
  bool residual_below = false;                // under the nonzero threshold
  std::map<std::string, bool> ic_below;
  std::map<std::string, Real> probe;          // signed IC deviation at the probe sample
};

struct ScanResult {
  std::string symbol;
  std::vector<ScanRow> rows;
  // field, grid values bracketing a sign change of the probe deviation
  std::vector<std::tuple<std::string, Rational, Rational>> sign_changes;
};

/// Sweep one parameter over a grid, measuring how far the claim is from
/// holding at each value with the other samples fixed by the plan. Rows
/// whose worst deviation drops under the nonzero threshold are flagged;
/// sign changes of the probe-point deviation are bracketed.
ScanResult parameter_scan(const ProblemSpec& spec, const Claim& claim, const std::string& symbol,
                          const std::vector<Rational>& grid, const SamplePlan& plan);

/// count equally spaced values from lo to hi inclusive (count >= 2).
std::vector<Rational> scan_grid(const Rational& lo, const Rational& hi, int count);

}  // namespace taycheck
