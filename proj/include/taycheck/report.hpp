#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "taycheck/numeric.hpp"
#include "taycheck/sampling.hpp"
#include "taycheck/series.hpp"
#include "taycheck/verifier.hpp"

namespace taycheck {

/// Reports keep their keys in insertion order so repeated runs serialize
/// byte for byte. No timestamps, no hostnames: identical inputs, identical
/// bytes.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "taycheck";
inline constexpr const char* kToolVersion = "0.1.0";

/// Identity of the problem file a report was made from.
struct ProblemInfo {
  std::string path;
  std::string sha256;
};

Json solve_report(const ProblemSpec& spec, const ProblemInfo& info,
                  const std::map<std::string, TimeSeries>& series,
                  const ResidualOrderResult& residual);

Json verify_report(const ProblemSpec& spec, const ProblemInfo& info, const SamplePlan& plan,
                   const ClaimReport& rep, const ScanResult* scan = nullptr);

Json compare_report(const ProblemSpec& spec, const ProblemInfo& info, int order, double tol,
                    const GridSolution& ref, const ValidityResult& window);

/// Two-space indent plus a trailing newline, suitable for stdout.
std::string dump_json(const Json& report);

std::string solve_text(const Json& report);
std::string verify_text(const Json& report);
std::string compare_text(const Json& report);

}  // namespace taycheck
