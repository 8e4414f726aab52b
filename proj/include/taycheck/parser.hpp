#pragma once

#include <string>

#include "taycheck/expr.hpp"

namespace taycheck {

/// Parse an infix expression. Errors carry 1-based positions; `line` and
/// `col0` offset the reported location so fragments embedded in larger files
/// point at the right place. The result is canonical (simplified).
Expr parse_expr(const std::string& text, int line = 1, int col0 = 0);

}  // namespace taycheck
