#include "taycheck/verifier.hpp"

#include <algorithm>

#include "taycheck/errors.hpp"

namespace taycheck {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Satisfied: return "Satisfied";
    case ClaimStatus::Violated: return "Violated";
    case ClaimStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(ZeroState s) {
  switch (s) {
    case ZeroState::ProvenZero: return "ProvenZero";
    case ZeroState::ProvenNonZero: return "ProvenNonZero";
    case ZeroState::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

struct MaxScan {
  std::optional<Witness> worst;
  int evaluated = 0;
  int poles = 0;
};

// Direct-evaluation sweep, independent of the rational-function route the
// verdict comes from.
MaxScan scan_max(const Expr& e, const std::vector<Bindings>& samples, unsigned digits) {
  MaxScan out;
  for (const Bindings& b : samples) {
    try {
      Real v = abs(eval(e, b, digits));
      ++out.evaluated;
      if (!out.worst || v > out.worst->magnitude) out.worst = Witness{b, v};
    } catch (const PoleEvaluation&) {
      ++out.poles;
    }
  }
  return out;
}

ExprCheck run_check(const std::string& field, const Expr& e, const std::vector<Bindings>& samples,
                    unsigned digits) {
  ExprCheck chk;
  chk.field = field;
  chk.expr = e;
  chk.verdict = is_zero_over(e, samples, digits);
  MaxScan m = scan_max(e, samples, digits);
  chk.worst = std::move(m.worst);
  chk.samples_evaluated = m.evaluated;
  chk.poles_skipped = m.poles;
  return chk;
}

}  // namespace

Expr claim_residual(const ProblemSpec& spec, const Claim& claim, const std::string& field) {
  Expr lhs = differentiate(claim.solutions.at(field), "t");
  Expr rhs = spec.rhs.at(field);
  for (const std::string& f : spec.fields) rhs = substitute(rhs, f, claim.solutions.at(f));
  rhs = resolve_operators(rhs, spec.space);
  return simplify(lhs - rhs);
}

Expr claim_ic_deviation(const ProblemSpec& spec, const Claim& claim, const std::string& field) {
  Expr at0 = substitute(claim.solutions.at(field), "t", Expr::integer(0));
  return simplify(at0 - spec.init.at(field));
}

ClaimReport check_claim(const ProblemSpec& spec, const Claim& claim, const SamplePlan& plan) {
  ClaimReport rep;
  rep.claim = claim.name;
  rep.precision = plan.precision;
  rep.seed = plan.seed;

  const auto res_samples = residual_samples(plan, spec.space);
  const auto ic_samples = initial_samples(plan, spec.space);
  for (const std::string& f : spec.fields) {
    rep.equations.push_back(
        run_check(f, claim_residual(spec, claim, f), res_samples, plan.precision));
    rep.initial_conditions.push_back(
        run_check(f, claim_ic_deviation(spec, claim, f), ic_samples, plan.precision));
  }

  bool all_zero = true, any_nonzero = false;
  auto fold = [&](const ExprCheck& c) {
    if (c.verdict.state != ZeroState::ProvenZero) all_zero = false;
    if (c.verdict.state == ZeroState::ProvenNonZero) any_nonzero = true;
  };
  for (const ExprCheck& c : rep.equations) fold(c);
  for (const ExprCheck& c : rep.initial_conditions) fold(c);
  rep.status = any_nonzero ? ClaimStatus::Violated
                           : (all_zero ? ClaimStatus::Satisfied : ClaimStatus::Inconclusive);
  return rep;
}

std::vector<Rational> scan_grid(const Rational& lo, const Rational& hi, int count) {
  if (count < 2) throw ValidationError("scan grid needs at least 2 points");
  std::vector<Rational> out;
  Rational step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out.push_back(lo + step * i);
  return out;
}

ScanResult parameter_scan(const ProblemSpec& spec, const Claim& claim, const std::string& symbol,
                          const std::vector<Rational>& grid, const SamplePlan& plan) {
  if (grid.empty()) throw ValidationError("scan grid is empty");
  bool declared = std::find(spec.params.begin(), spec.params.end(), symbol) != spec.params.end() ||
                  std::find(claim.extra_params.begin(), claim.extra_params.end(), symbol) !=
                      claim.extra_params.end();
  if (!declared) throw ValidationError("scan symbol '" + symbol + "' is not a parameter");

  std::vector<Expr> residuals;
  std::map<std::string, Expr> deviations;
  for (const std::string& f : spec.fields) {
    residuals.push_back(claim_residual(spec, claim, f));
    deviations.emplace(f, claim_ic_deviation(spec, claim, f));
  }

  ScanResult scan;
  scan.symbol = symbol;
  const Real threshold(kNonZeroThreshold, plan.precision);
  for (const Rational& g : grid) {
    SamplePlan local = plan;
    for (Bindings& b : local.param_sets) b[symbol] = g;
    const auto res_samples = residual_samples(local, spec.space);
    const auto ic_samples = initial_samples(local, spec.space);

    ScanRow row;
    row.value = g;
    row.max_residual = Real(0, plan.precision);
    for (const Expr& r : residuals) {
      MaxScan m = scan_max(r, res_samples, plan.precision);
      if (m.worst && m.worst->magnitude > row.max_residual)
        row.max_residual = m.worst->magnitude;
    }
    row.residual_below = row.max_residual < threshold;
    for (const auto& [f, d] : deviations) {
      MaxScan m = scan_max(d, ic_samples, plan.precision);
      Real dev = m.worst ? m.worst->magnitude : Real(0, plan.precision);
      row.ic_deviation[f] = dev;
      row.ic_below[f] = dev < threshold;
      // signed probe at the first space sample, base parameters
      Bindings pb = local.param_sets.front();
      pb[spec.space] = local.space.front();
      try {
        row.probe[f] = eval(d, pb, plan.precision);
      } catch (const PoleEvaluation&) {
        row.probe[f] = Real(0, plan.precision);
      }
    }
    scan.rows.push_back(std::move(row));
  }

  for (std::size_t i = 1; i < scan.rows.size(); ++i)
    for (const std::string& f : spec.fields) {
      const Real& a = scan.rows[i - 1].probe.at(f);
      const Real& b = scan.rows[i].probe.at(f);
      if ((a < 0 && b > 0) || (a > 0 && b < 0))
        scan.sign_changes.emplace_back(f, scan.rows[i - 1].value, scan.rows[i].value);
    }
  return scan;
}

}  // namespace taycheck
