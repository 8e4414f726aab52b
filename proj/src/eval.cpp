#include "taycheck/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "taycheck/errors.hpp"

namespace taycheck {

namespace {

Real eval_rec(const Expr& e, const Bindings& b, unsigned digits) {
  switch (e.kind()) {
    case Kind::Const:
      return Real(e.value(), digits);
    case Kind::Symbol: {
      auto it = b.find(e.name());
      if (it == b.end()) throw UnboundSymbol("no binding for symbol '" + e.name() + "'");
      return Real(it->second, digits);
    }
    case Kind::Exp:
      return exp(eval_rec(e.child(0), b, digits));
    case Kind::Tanh:
      return tanh(eval_rec(e.child(0), b, digits));
    case Kind::Sech:
      return Real(1, digits) / cosh(eval_rec(e.child(0), b, digits));
    case Kind::Cosh:
      return cosh(eval_rec(e.child(0), b, digits));
    case Kind::Sinh:
      return sinh(eval_rec(e.child(0), b, digits));
    case Kind::IntPow: {
      Real base = eval_rec(e.child(0), b, digits);
      long long k = e.exponent();
      if (base == 0 && k < 0) throw PoleEvaluation("negative power of exact zero");
      if (k == 0) return Real(1, digits);
      bool inv = k < 0;
      unsigned long long n = inv ? static_cast<unsigned long long>(-(k + 1)) + 1
                                 : static_cast<unsigned long long>(k);
      Real acc(1, digits), sq = base;
      while (n) {
        if (n & 1) acc *= sq;
        sq *= sq;
        n >>= 1;
      }
      if (inv) acc = Real(1, digits) / acc;
      return acc;
    }
    case Kind::Product: {
      Real acc(1, digits);
      for (const Expr& k : e.children()) acc *= eval_rec(k, b, digits);
      return acc;
    }
    case Kind::Sum: {
      Real acc(0, digits);
      for (const Expr& k : e.children()) acc += eval_rec(k, b, digits);
      return acc;
    }
    case Kind::Dx:
    case Kind::Dxx:
    case Kind::Shift:
      throw UnresolvedOperator("cannot numerically evaluate an unresolved operator node");
  }
  throw EngineError("unhandled node kind in eval");
}

}  // namespace

Real eval(const Expr& e, const Bindings& bindings, unsigned digits) {
  unsigned work = std::max(digits, kMinDigits) + 10;  // guard digits
  PrecisionScope guard(work);
  Real v = eval_rec(e, bindings, work);
  v.precision(std::max(digits, kMinDigits));
  return v;
}

double eval_double(const Expr& e, const Bindings& bindings) {
  return eval(e, bindings, 20).convert_to<double>();
}

std::string real_str(const Real& v, unsigned sig) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(static_cast<int>(sig) - 1);
  os << v;
  return os.str();
}

}  // namespace taycheck
