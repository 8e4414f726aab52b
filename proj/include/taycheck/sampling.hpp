#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taycheck/eval.hpp"
#include "taycheck/problem.hpp"

namespace taycheck {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Where a claim gets probed: space points, times, and complete parameter
/// bindings. The seed that generated the perturbed parameter sets is kept
/// so every report can be reproduced bit for bit.
struct SamplePlan {
  std::vector<Rational> space;
  std::vector<Rational> times;
  std::vector<Bindings> param_sets;
  unsigned precision = kDefaultDigits;
  std::uint64_t seed = kDefaultSeed;
};

/// Default plan: x in {-2, -1, -1/2, 1/2, 1, 2} for continuous problems,
/// n in -3..3 for lattices; t in {1/10, 1/2, 1}; one base parameter set
/// with every parameter at 1 plus eight seeded rational perturbations of
/// it (each value lands in (0, 2), never exactly 1, never 0). Claim-local
/// parameters are included when the claim is given.
SamplePlan default_plan(const ProblemSpec& spec, const Claim* claim = nullptr,
                        std::uint64_t seed = kDefaultSeed);

/// Full bindings for residual checks: space x t x parameter sets.
std::vector<Bindings> residual_samples(const SamplePlan& plan, const std::string& space);

/// Bindings for t = 0 checks: space x parameter sets, no t.
std::vector<Bindings> initial_samples(const SamplePlan& plan, const std::string& space);

}  // namespace taycheck
