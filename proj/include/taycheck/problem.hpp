#pragma once

#include <map>
#include <string>
#include <vector>

#include "taycheck/expr.hpp"

namespace taycheck {

enum class ProblemKind { Pde, Dde };

/// A named closed-form candidate solution: one expression per field, in the
/// space symbol, time symbol t, the problem parameters, and any claim-local
/// extra parameters.
struct Claim {
  std::string name;
  std::vector<std::string> extra_params;
  std::map<std::string, Expr> solutions;  // field -> expr
};

/// Parsed, validated problem description.
///
/// Guarantees after parse_problem:
///  - every field has exactly one evolution equation and one initial profile
///  - PDE right-hand sides use no shift; DDE right-hand sides use no dx/dxx
///  - no right-hand side or initial profile references t
///  - every symbol in every expression is a declared field, parameter, the
///    space symbol, or (claims only) t and claim-local parameters
struct ProblemSpec {
  ProblemKind kind = ProblemKind::Pde;
  std::string space;  // "x" for PDEs, "n" for lattices by convention
  std::vector<std::string> fields;
  std::vector<std::string> params;
  std::map<std::string, Expr> rhs;   // field -> d(field)/dt
  std::map<std::string, Expr> init;  // field -> profile at t = 0
  std::vector<Claim> claims;
};

ProblemSpec parse_problem(const std::string& text);
ProblemSpec load_problem(const std::string& path);

const Claim* find_claim(const ProblemSpec& spec, const std::string& name);

}  // namespace taycheck
