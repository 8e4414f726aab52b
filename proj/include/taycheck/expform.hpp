#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taycheck/eval.hpp"
#include "taycheck/expr.hpp"
#include "taycheck/poly.hpp"

namespace taycheck {

/// One exponential atom: the variable stands for exp(unit * primitive).
/// `unit` is positive; every exp occurrence sharing the primitive becomes an
/// integer power of the atom.
struct Atom {
  Expr primitive;  // canonical, rational-content-free
  Rational unit;
};

/// Variable universe of a rational-function form: atom variables first, then
/// plain symbols, both in a deterministic order.
struct AtomTable {
  std::vector<Atom> atoms;
  std::vector<std::string> symbols;
  int nvars() const { return static_cast<int>(atoms.size() + symbols.size()); }
};

/// e rewritten as num/den over the atom variables. After to_exp_atoms the
/// pair is fully cancelled: gcd(num, den) is a unit, den is primitive with
/// positive leading coefficient, and den is never the zero polynomial.
struct RationalFunctionForm {
  AtomTable table;
  Poly num;
  Poly den;
  RationalFunctionForm() : num(0), den(0) {}
};

/// Rewrite into the canonical cancelled rational-function form. Hyperbolics
/// become rational expressions in exp atoms; exp of a sum splits into a
/// product of atoms. Throws UnresolvedOperator on dx/dxx/shift nodes,
/// DegenerateExpression when a denominator is provably the zero function,
/// AtomMergeFailure when merging would need absurdly large integer powers.
RationalFunctionForm to_exp_atoms(const Expr& e);

/// Numeric value of a form at a binding; used to cross-check the rewrite.
Real form_eval(const RationalFunctionForm& f, const Bindings& b, unsigned digits = kDefaultDigits);

enum class ZeroState { ProvenZero, ProvenNonZero, Unknown };

struct Witness {
  Bindings bindings;
  Real magnitude;
};

struct ZeroVerdict {
  ZeroState state = ZeroState::Unknown;
  std::optional<Witness> witness;  // present for ProvenNonZero
  bool symbolic = false;           // settled by the numerator alone, no sampling
  int samples_used = 0;
  int poles_skipped = 0;
};

inline constexpr double kNonZeroThreshold = 1e-6;

/// Decide whether e is identically zero. ProvenZero is exact (the rewritten
/// numerator vanishes); ProvenNonZero carries a witness sample with
/// |value| > 1e-6 at `digits` working precision; everything else is Unknown.
ZeroVerdict is_zero(const Expr& e, unsigned digits = kDefaultDigits);

/// Same, but sampling only over the given bindings (the caller owns the
/// sample plan). Bindings that hit poles are skipped and counted.
ZeroVerdict is_zero_over(const Expr& e, const std::vector<Bindings>& samples,
                         unsigned digits = kDefaultDigits);

}  // namespace taycheck
