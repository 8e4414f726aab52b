#include "taycheck/sampling.hpp"

#include <algorithm>

namespace taycheck {

namespace {

// Nonzero offset in [-8/9, 8/9] \ {0}; added to 1 this stays inside (0, 2),
// so no parameter is ever sampled at 0 or at its base value.
Rational perturbation(SplitMix64& rng) {
  long long num = static_cast<long long>(rng.below(16)) - 8;
  if (num >= 0) ++num;
  long long den = static_cast<long long>(rng.below(8)) + 9;
  return Rational(num, den);
}

}  // namespace

SamplePlan default_plan(const ProblemSpec& spec, const Claim* claim, std::uint64_t seed) {
  SamplePlan plan;
  plan.seed = seed;
  if (spec.kind == ProblemKind::Pde) {
    plan.space = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1),
                  Rational(2)};
  } else {
    for (int n = -3; n <= 3; ++n) plan.space.push_back(Rational(n));
  }
  plan.times = {Rational(1, 10), Rational(1, 2), Rational(1)};

  std::vector<std::string> names = spec.params;
  if (claim) {
    for (const std::string& p : claim->extra_params)
      if (std::find(names.begin(), names.end(), p) == names.end()) names.push_back(p);
  }

  Bindings base;
  for (const std::string& p : names) base[p] = Rational(1);
  plan.param_sets.push_back(base);
  if (names.empty()) return plan;  // nothing to perturb

  SplitMix64 rng{seed};
  for (int i = 0; i < 8; ++i) {
    Bindings b;
    for (const std::string& p : names) b[p] = Rational(1) + perturbation(rng);
    plan.param_sets.push_back(std::move(b));
  }
  return plan;
}

std::vector<Bindings> residual_samples(const SamplePlan& plan, const std::string& space) {
  std::vector<Bindings> out;
  out.reserve(plan.param_sets.size() * plan.space.size() * plan.times.size());
  for (const Bindings& ps : plan.param_sets)
    for (const Rational& s : plan.space)
      for (const Rational& t : plan.times) {
        Bindings b = ps;
        b[space] = s;
        b["t"] = t;
        out.push_back(std::move(b));
      }
  return out;
}

std::vector<Bindings> initial_samples(const SamplePlan& plan, const std::string& space) {
  std::vector<Bindings> out;
  out.reserve(plan.param_sets.size() * plan.space.size());
  for (const Bindings& ps : plan.param_sets)
    for (const Rational& s : plan.space) {
      Bindings b = ps;
      b[space] = s;
      out.push_back(std::move(b));
    }
  return out;
}

}  // namespace taycheck
