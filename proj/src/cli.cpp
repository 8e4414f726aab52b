#include "taycheck/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "taycheck/errors.hpp"
#include "taycheck/numeric.hpp"
#include "taycheck/report.hpp"
#include "taycheck/series.hpp"
#include "taycheck/sha256.hpp"
#include "taycheck/verifier.hpp"

namespace taycheck {

namespace {

struct LoadedProblem {
  ProblemSpec spec;
  ProblemInfo info;
};

LoadedProblem read_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return {parse_problem(text), ProblemInfo{path, sha256_hex(text)}};
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  Rational q;
  if (!rational_parse(text, q)) throw ValidationError(what + ": not a rational: " + text);
  return q;
}

// NAME=VALUE with an exact rational value
std::pair<std::string, Rational> parse_param_flag(const std::string& flag) {
  const auto eq = flag.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ValidationError("--param wants NAME=VALUE, got: " + flag);
  return {flag.substr(0, eq), parse_rational_arg(flag.substr(eq + 1), "--param " + flag)};
}

void require_declared(const ProblemSpec& spec, const Claim* claim, const std::string& name) {
  for (const auto& p : spec.params)
    if (p == name) return;
  if (claim)
    for (const auto& p : claim->extra_params)
      if (p == name) return;
  throw ValidationError("unknown parameter: " + name);
}

/// Numeric parameter values for series/grid work: every declared parameter
/// at 1, then the --param pins on top.
Bindings base_params(const ProblemSpec& spec, const std::vector<std::string>& pins) {
  Bindings b;
  for (const auto& p : spec.params) b[p] = 1;
  for (const auto& flag : pins) {
    auto [name, value] = parse_param_flag(flag);
    require_declared(spec, nullptr, name);
    b[name] = value;
  }
  return b;
}

struct ScanSpec {
  std::string symbol;
  Rational lo, hi;
  int count = 0;
};

// NAME=lo..hi:count
ScanSpec parse_scan_flag(const std::string& flag) {
  const auto eq = flag.find('=');
  const auto dots = flag.find("..", eq == std::string::npos ? 0 : eq);
  const auto colon = flag.rfind(':');
  if (eq == std::string::npos || dots == std::string::npos || colon == std::string::npos ||
      !(eq < dots && dots + 1 < colon))
    throw ValidationError("--scan wants NAME=lo..hi:count, got: " + flag);
  ScanSpec s;
  s.symbol = flag.substr(0, eq);
  s.lo = parse_rational_arg(flag.substr(eq + 1, dots - eq - 1), "--scan " + flag);
  s.hi = parse_rational_arg(flag.substr(dots + 2, colon - dots - 2), "--scan " + flag);
  try {
    s.count = std::stoi(flag.substr(colon + 1));
  } catch (const std::exception&) {
    throw ValidationError("--scan wants an integer count, got: " + flag);
  }
  return s;
}

std::vector<Rational> default_t_samples() {
  return {Rational(1, 10), Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};
}

void emit(const Json& report, bool json, std::string (*text)(const Json&)) {
  if (json)
    std::cout << dump_json(report);
  else
    std::cout << text(report);
}

struct SolveArgs {
  std::string file;
  int order = 3;
  unsigned precision = kDefaultDigits;
  std::size_t node_budget = SeriesOptions{}.node_budget;
  std::vector<std::string> params;
  bool json = false;
};

int cmd_solve(const SolveArgs& a) {
  auto [spec, info] = read_problem(a.file);
  auto series = taylor_expand(spec, a.order, SeriesOptions{a.node_budget});
  auto params = base_params(spec, a.params);
  auto plan = default_plan(spec);
  auto ro = residual_order(spec, series, default_t_samples(), plan.space, params, a.precision);
  emit(solve_report(spec, info, series, ro), a.json, solve_text);
  return 0;
}

struct VerifyArgs {
  std::string file;
  std::string claim;
  unsigned precision = kDefaultDigits;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> params;
  std::string scan;
  bool json = false;
};

int verify_one(const ProblemSpec& spec, const ProblemInfo& info, const Claim& claim,
               const VerifyArgs& a, Json* out) {
  ScanSpec s;
  if (!a.scan.empty()) s = parse_scan_flag(a.scan);

  SamplePlan plan = default_plan(spec, &claim, a.seed);
  plan.precision = a.precision;
  for (const auto& flag : a.params) {
    auto [name, value] = parse_param_flag(flag);
    require_declared(spec, &claim, name);
    for (auto& set : plan.param_sets) set[name] = value;
  }
  ClaimReport rep = check_claim(spec, claim, plan);

  ScanResult scan;
  bool scanned = false;
  if (!a.scan.empty()) {
    scan = parameter_scan(spec, claim, s.symbol, scan_grid(s.lo, s.hi, s.count), plan);
    scanned = true;
  }
  *out = verify_report(spec, info, plan, rep, scanned ? &scan : nullptr);

  switch (rep.status) {
    case ClaimStatus::Satisfied: return 0;
    case ClaimStatus::Violated: return 2;
    case ClaimStatus::Inconclusive: return 3;
  }
  return 1;
}

int cmd_verify(const VerifyArgs& a) {
  auto [spec, info] = read_problem(a.file);
  const Claim* claim = find_claim(spec, a.claim);
  if (!claim) throw ValidationError("no claim named " + a.claim + " in " + a.file);
  Json report;
  const int code = verify_one(spec, info, *claim, a, &report);
  emit(report, a.json, verify_text);
  return code;
}

struct CompareArgs {
  std::string file;
  int order = 3;
  double t_max = 0.5;
  double tol = 1e-4;
  unsigned precision = kDefaultDigits;
  std::string half_width = "20";
  int points = 400;
  int window = 16;
  double dt = 0.0;  // 0 picks the per-kind default
  std::size_t node_budget = SeriesOptions{}.node_budget;
  std::vector<std::string> params;
  std::string csv;
  bool json = false;
};

GridSolution compare_reference(const ProblemSpec& spec, const Bindings& params,
                               const CompareArgs& a) {
  if (spec.kind == ProblemKind::Pde) {
    MolOptions opt;
    opt.half_width = parse_rational_arg(a.half_width, "--half-width");
    opt.points = a.points;
    opt.dt = a.dt;
    opt.t_end = a.t_max;
    return mol_integrate(spec, params, opt);
  }
  DdeOptions opt;
  opt.window = a.window;
  opt.dt = a.dt > 0.0 ? a.dt : 1e-3;
  opt.t_end = a.t_max;
  return dde_integrate(spec, params, opt);
}

int cmd_compare(const CompareArgs& a) {
  auto [spec, info] = read_problem(a.file);
  auto params = base_params(spec, a.params);
  auto series = taylor_expand(spec, a.order, SeriesOptions{a.node_budget});
  GridSolution ref;
  try {
    ref = compare_reference(spec, params, a);
  } catch (const StabilityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const BlowUp& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  auto vw = validity_window(series, ref, a.tol, params);
  emit(compare_report(spec, info, a.order, a.tol, ref, vw), a.json, compare_text);
  if (!a.csv.empty()) {
    std::ofstream out(a.csv, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + a.csv);
    out << grid_csv(ref);
  }
  return 0;
}

struct ReportArgs {
  std::string file;
  int order = 3;
  double t_max = 0.5;
  double tol = 1e-4;
  unsigned precision = kDefaultDigits;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> params;
  bool json = false;
};

/// Everything about one problem file in a single document: the series, every
/// claim's verdict, and the reference comparison. Claim verdicts do not move
/// the exit code here; this command reports, the focused commands judge.
int cmd_report(const ReportArgs& a) {
  auto [spec, info] = read_problem(a.file);

  SolveArgs sa;
  sa.file = a.file;
  sa.order = a.order;
  sa.precision = a.precision;
  sa.params = a.params;
  auto series = taylor_expand(spec, a.order);
  auto params = base_params(spec, a.params);
  auto plan = default_plan(spec);
  auto ro = residual_order(spec, series, default_t_samples(), plan.space, params, a.precision);
  Json solve = solve_report(spec, info, series, ro);

  std::vector<Json> verifies;
  std::string verify_texts;
  for (const auto& claim : spec.claims) {
    VerifyArgs va;
    va.file = a.file;
    va.precision = a.precision;
    va.seed = a.seed;
    va.params = a.params;
    Json rep;
    verify_one(spec, info, claim, va, &rep);
    verify_texts += verify_text(rep) + "\n";
    verifies.push_back(std::move(rep));
  }

  CompareArgs ca;
  ca.file = a.file;
  ca.order = a.order;
  ca.t_max = a.t_max;
  ca.tol = a.tol;
  ca.params = a.params;
  auto ref = compare_reference(spec, params, ca);
  auto vw = validity_window(series, ref, a.tol, params);
  Json compare = compare_report(spec, info, a.order, a.tol, ref, vw);

  if (!a.json) {
    std::cout << solve_text(solve) << "\n" << verify_texts << compare_text(compare);
    return 0;
  }
  // one tool/problem header for the composite document
  for (Json* sub : {&solve, &compare}) {
    sub->erase("tool");
    sub->erase("problem");
  }
  Json claims = Json::array();
  for (auto& v : verifies) {
    v.erase("tool");
    v.erase("problem");
    claims.push_back(std::move(v));
  }
  std::cout << dump_json(Json{{"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
                              {"command", "report"},
                              {"problem",
                               Json{{"file", info.path},
                                    {"sha256", info.sha256},
                                    {"kind", spec.kind == ProblemKind::Pde ? "pde" : "dde"},
                                    {"space", spec.space},
                                    {"fields", spec.fields},
                                    {"params", spec.params}}},
                              {"solve", std::move(solve)},
                              {"claims", std::move(claims)},
                              {"compare", std::move(compare)}});
  return 0;
}

void add_precision(CLI::App* cmd, unsigned* precision) {
  cmd->add_option("--precision", *precision, "working decimal digits")
      ->envname("TAYCHECK_PRECISION")
      ->check(CLI::Range(5u, 10000u));
}

void add_params(CLI::App* cmd, std::vector<std::string>* params) {
  cmd->add_option("--param", *params, "pin a parameter, NAME=VALUE with VALUE rational");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Taylor series in t for evolution problems, and a checker for claimed closed forms"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "expand the solution about t = 0");
  solve->add_option("problem", sa.file, "problem file")->required();
  solve->add_option("--order", sa.order, "series order")->check(CLI::Range(0, 64));
  solve->add_option("--node-budget", sa.node_budget, "per-coefficient tree size cap");
  solve->add_flag("--json", sa.json, "emit JSON");
  add_precision(solve, &sa.precision);
  add_params(solve, &sa.params);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "test a claimed exact solution");
  verify->add_option("problem", va.file, "problem file")->required();
  verify->add_option("--claim", va.claim, "claim name")->required();
  verify->add_option("--seed", va.seed, "perturbation seed");
  verify->add_option("--scan", va.scan, "sweep a parameter, NAME=lo..hi:count");
  verify->add_flag("--json", va.json, "emit JSON");
  add_precision(verify, &va.precision);
  add_params(verify, &va.params);

  CompareArgs ca;
  auto* compare = app.add_subcommand("compare", "series against a numeric reference");
  compare->add_option("problem", ca.file, "problem file")->required();
  compare->add_option("--order", ca.order, "series order")->check(CLI::Range(0, 64));
  compare->add_option("--t-max", ca.t_max, "integration horizon");
  compare->add_option("--tol", ca.tol, "validity tolerance (inf allowed)");
  compare->add_option("--half-width", ca.half_width, "continuous domain half width (rational)");
  compare->add_option("--points", ca.points, "grid intervals for continuous problems");
  compare->add_option("--window", ca.window, "lattice window half width");
  compare->add_option("--dt", ca.dt, "time step (0 = per-kind default)");
  compare->add_option("--node-budget", ca.node_budget, "per-coefficient tree size cap");
  compare->add_option("--csv", ca.csv, "also dump the reference grid as CSV to this file");
  compare->add_flag("--json", ca.json, "emit JSON");
  add_precision(compare, &ca.precision);
  add_params(compare, &ca.params);

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "solve, verify every claim, and compare");
  report->add_option("problem", ra.file, "problem file")->required();
  report->add_option("--order", ra.order, "series order")->check(CLI::Range(0, 64));
  report->add_option("--t-max", ra.t_max, "integration horizon");
  report->add_option("--tol", ra.tol, "validity tolerance");
  report->add_option("--seed", ra.seed, "perturbation seed");
  report->add_flag("--json", ra.json, "emit JSON");
  add_precision(report, &ra.precision);
  add_params(report, &ra.params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(sa);
    if (verify->parsed()) return cmd_verify(va);
    if (compare->parsed()) return cmd_compare(ca);
    return cmd_report(ra);
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace taycheck
