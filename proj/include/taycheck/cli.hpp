#pragma once

namespace taycheck {

/// Full command-line front end: parse arguments, run one command, print the
/// report to stdout, diagnostics to stderr. Returns the process exit code:
/// 0 success (verify: claim Satisfied), 1 usage or engine error, 2 claim
/// Violated, 3 claim Inconclusive, 4 numeric reference aborted (blow-up or
/// stability bound). Runs in-process; no global state survives the call.
int run_cli(int argc, const char* const* argv);

}  // namespace taycheck
