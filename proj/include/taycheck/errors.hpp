#pragma once

#include <stdexcept>
#include <string>

namespace taycheck {

/// Root of every failure this library raises on purpose. Catching EngineError
/// at a boundary is always safe; anything else escaping is a bug.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Simplification produced a meaningless value (division by a literal zero,
/// zero raised to a negative power).
struct DegenerateExpression : EngineError {
  using EngineError::EngineError;
};

/// Numeric evaluation met a symbol with no binding.
struct UnboundSymbol : EngineError {
  using EngineError::EngineError;
};

/// Numeric evaluation would divide by an exact zero.
struct PoleEvaluation : EngineError {
  using EngineError::EngineError;
};

/// A spatial/lattice operator node reached a context that requires plain
/// closed-form expressions (calculus, evaluation, atom extraction).
struct UnresolvedOperator : EngineError {
  using EngineError::EngineError;
};

/// Exponential atoms could not be merged into a common rational-power basis.
struct AtomMergeFailure : EngineError {
  using EngineError::EngineError;
};

/// Series coefficients exceeded the configured node budget.
struct OrderOverflow : EngineError {
  using EngineError::EngineError;
};

/// Explicit time step violates the diffusion stability bound.
struct StabilityViolation : EngineError {
  using EngineError::EngineError;
};

/// Grid values left the representable range mid-integration.
struct BlowUp : EngineError {
  using EngineError::EngineError;
};

/// Parse failure with a source location. line/col are 1-based.
struct SourceError : EngineError {
  int line;
  int col;
  std::string token;
  SourceError(int line_, int col_, const std::string& what_, std::string token_ = "")
      : EngineError("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + what_),
        line(line_), col(col_), token(std::move(token_)) {}
};

/// Structurally valid input that violates a semantic rule of the problem format.
struct ValidationError : EngineError {
  using EngineError::EngineError;
};

}  // namespace taycheck
