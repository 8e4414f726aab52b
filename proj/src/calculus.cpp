#include "taycheck/errors.hpp"
#include "taycheck/expr.hpp"

namespace taycheck {

namespace {

// Raw derivative; caller simplifies once at the top.
Expr diff_raw(const Expr& e, const std::string& s) {
  switch (e.kind()) {
    case Kind::Const:
      return Expr::integer(0);
    case Kind::Symbol:
      return Expr::integer(e.name() == s ? 1 : 0);
    case Kind::Exp:
      return Expr::product({Expr::exp(e.child(0)), diff_raw(e.child(0), s)});
    case Kind::Tanh:
      return Expr::product({Expr::pow(Expr::sech(e.child(0)), 2), diff_raw(e.child(0), s)});
    case Kind::Sech:
      return Expr::product({Expr::integer(-1), Expr::sech(e.child(0)), Expr::tanh(e.child(0)),
                            diff_raw(e.child(0), s)});
    case Kind::Cosh:
      return Expr::product({Expr::sinh(e.child(0)), diff_raw(e.child(0), s)});
    case Kind::Sinh:
      return Expr::product({Expr::cosh(e.child(0)), diff_raw(e.child(0), s)});
    case Kind::IntPow:
      return Expr::product({Expr::integer(e.exponent()), Expr::pow(e.child(0), e.exponent() - 1),
                            diff_raw(e.child(0), s)});
    case Kind::Sum: {
      ExprList ts;
      ts.reserve(e.children().size());
      for (const Expr& k : e.children()) ts.push_back(diff_raw(k, s));
      return Expr::sum(std::move(ts));
    }
    case Kind::Product: {
      ExprList ts;
      ts.reserve(e.children().size());
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        ExprList fs;
        fs.reserve(e.children().size());
        for (std::size_t j = 0; j < e.children().size(); ++j)
          fs.push_back(i == j ? diff_raw(e.child(j), s) : e.child(j));
        ts.push_back(Expr::product(std::move(fs)));
      }
      return Expr::sum(std::move(ts));
    }
    case Kind::Dx:
    case Kind::Dxx:
    case Kind::Shift:
      throw UnresolvedOperator("cannot differentiate through an unresolved operator node");
  }
  throw EngineError("unhandled node kind in differentiate");
}

Expr subst_raw(const Expr& e, const std::string& s, const Expr& r) {
  if (e.kind() == Kind::Symbol) return e.name() == s ? r : e;
  if (e.children().empty()) return e;
  ExprList kids;
  kids.reserve(e.children().size());
  bool touched = false;
  for (const Expr& k : e.children()) {
    Expr nk = subst_raw(k, s, r);
    touched = touched || !struct_equal(nk, k);
    kids.push_back(std::move(nk));
  }
  if (!touched) return e;
  switch (e.kind()) {
    case Kind::Exp:
      return Expr::exp(kids[0]);
    case Kind::Tanh:
      return Expr::tanh(kids[0]);
    case Kind::Sech:
      return Expr::sech(kids[0]);
    case Kind::Cosh:
      return Expr::cosh(kids[0]);
    case Kind::Sinh:
      return Expr::sinh(kids[0]);
    case Kind::IntPow:
      return Expr::pow(kids[0], e.exponent());
    case Kind::Sum:
      return Expr::sum(std::move(kids));
    case Kind::Product:
      return Expr::product(std::move(kids));
    case Kind::Dx:
      return Expr::dx(kids[0]);
    case Kind::Dxx:
      return Expr::dxx(kids[0]);
    case Kind::Shift:
      return Expr::shift(kids[0], e.offset());
    default:
      throw EngineError("unhandled node kind in substitute");
  }
}

}  // namespace

Expr differentiate(const Expr& e, const std::string& sym) { return simplify(diff_raw(e, sym)); }

Expr substitute(const Expr& e, const std::string& sym, const Expr& replacement) {
  return simplify(subst_raw(e, sym, replacement));
}

Expr resolve_operators(const Expr& e, const std::string& space) {
  switch (e.kind()) {
    case Kind::Const:
    case Kind::Symbol:
      return e;
    case Kind::Dx:
      return differentiate(resolve_operators(e.child(0), space), space);
    case Kind::Dxx:
      return differentiate(differentiate(resolve_operators(e.child(0), space), space), space);
    case Kind::Shift: {
      Expr inner = resolve_operators(e.child(0), space);
      Expr moved = Expr::sum({Expr::symbol(space), Expr::integer(e.offset())});
      return substitute(inner, space, moved);
    }
    default: {
      ExprList kids;
      kids.reserve(e.children().size());
      for (const Expr& k : e.children()) kids.push_back(resolve_operators(k, space));
      switch (e.kind()) {
        case Kind::Exp:
          return Expr::exp(kids[0]);
        case Kind::Tanh:
          return Expr::tanh(kids[0]);
        case Kind::Sech:
          return Expr::sech(kids[0]);
        case Kind::Cosh:
          return Expr::cosh(kids[0]);
        case Kind::Sinh:
          return Expr::sinh(kids[0]);
        case Kind::IntPow:
          return Expr::pow(kids[0], e.exponent());
        case Kind::Sum:
          return Expr::sum(std::move(kids));
        case Kind::Product:
          return Expr::product(std::move(kids));
        default:
          throw EngineError("unhandled node kind in resolve_operators");
      }
    }
  }
}

}  // namespace taycheck
