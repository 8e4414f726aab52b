#pragma once

#include <map>
#include <string>
#include <vector>

#include "taycheck/eval.hpp"
#include "taycheck/problem.hpp"
#include "taycheck/series.hpp"

namespace taycheck {

/// Reference trajectory on a finite grid. Values are double precision:
/// discretization error dominates rounding here. Comparisons should stay
/// inside |coordinate| <= trust_radius, away from the frozen edges.
struct GridSolution {
  ProblemKind kind = ProblemKind::Pde;
  std::vector<double> space;
  std::vector<Rational> space_exact;
  std::vector<double> times;  // snapshot times, first is 0
  std::map<std::string, std::vector<std::vector<double>>> values;  // field -> [time][node]
  double h = 0.0;
  double dt = 0.0;
  double trust_radius = 0.0;
  Bindings params;
  std::string boundary = "frozen";
};

struct MolOptions {
  Rational half_width = 20;  // domain [-L, L]
  int points = 400;          // M intervals, M+1 nodes
  double dt = 0.0;           // 0 picks h^2/8
  double t_end = 0.1;
  int max_snapshots = 600;
};

struct DdeOptions {
  int window = 16;  // sites n in [-W, W]
  double dt = 1e-3;
  double t_end = 0.1;
  int max_snapshots = 600;
};

/// Method of lines: second-order central differences for dx/dxx, classical
/// RK4 in time, edge nodes held at the initial profile. The trust region is
/// |x| <= L - max(1, L/4). Throws StabilityViolation when the requested dt
/// exceeds h^2/4 and BlowUp when any value passes 1e10 or stops being
/// finite.
GridSolution mol_integrate(const ProblemSpec& spec, const Bindings& params,
                           const MolOptions& opt = {});

/// Same scheme with the initial node values supplied directly, for profiles
/// the expression language cannot write (trigonometric modes and the like).
GridSolution mol_integrate_raw(const ProblemSpec& spec, const Bindings& params,
                               const std::map<std::string, std::vector<double>>& initial,
                               const MolOptions& opt = {});

/// Classical RK4 on the 2W+1 coupled site equations; shifts read clamped
/// neighbor values, the two edge sites stay at their initial values, and
/// the trust region is |n| <= W - 2.
GridSolution dde_integrate(const ProblemSpec& spec, const Bindings& params,
                           const DdeOptions& opt = {});
GridSolution dde_integrate_raw(const ProblemSpec& spec, const Bindings& params,
                               const std::map<std::string, std::vector<double>>& initial,
                               const DdeOptions& opt = {});

struct ValidityResult {
  double t_star = 0.0;
  std::vector<std::pair<double, double>> errors;  // (t, max error over trusted nodes)
};

/// How long the truncated series tracks the reference: t* is the largest
/// snapshot time such that every field stays within tol at every trusted
/// node up to and including it (first crossing; 0 when the first positive
/// snapshot already violates tol). The full error curve is returned so
/// callers can inspect growth beyond t*.
ValidityResult validity_window(const std::map<std::string, TimeSeries>& series,
                               const GridSolution& ref, double tol, const Bindings& params);

/// Rows of t,space,field,value.
std::string grid_csv(const GridSolution& sol);

}  // namespace taycheck
