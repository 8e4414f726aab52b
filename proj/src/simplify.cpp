#include <algorithm>
#include <map>
#include <utility>

#include "taycheck/errors.hpp"
#include "taycheck/expr.hpp"

namespace taycheck {

namespace {

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

Expr simplify_pow(const Expr& base, long long e);
Expr simplify_product(ExprList factors);
Expr simplify_sum(ExprList terms);
std::pair<Rational, Expr> term_split(const Expr& t);
Expr term_join(const Rational& c, const Expr& core);

// base is already canonical.
Expr simplify_pow(const Expr& base, long long e) {
  if (e == 0) return Expr::integer(1);
  if (e == 1) return base;
  switch (base.kind()) {
    case Kind::Const:
      return Expr::constant(rational_pow(base.value(), e));
    case Kind::IntPow:
      return simplify_pow(base.child(0), base.exponent() * e);
    case Kind::Product: {
      ExprList fs;
      fs.reserve(base.children().size());
      for (const Expr& f : base.children()) fs.push_back(simplify_pow(f, e));
      return simplify_product(std::move(fs));
    }
    default:
      return Expr::pow(base, e);
  }
}

// Factors are already canonical. Flattens, folds constants, merges like bases.
Expr simplify_product(ExprList factors) {
  for (;;) {
    Rational coeff(1);
    std::vector<std::pair<Expr, long long>> bases;  // insertion order
    bool changed = false;

    std::vector<Expr> stack(factors.rbegin(), factors.rend());
    while (!stack.empty()) {
      Expr f = stack.back();
      stack.pop_back();
      if (f.kind() == Kind::Product) {
        for (auto it = f.children().rbegin(); it != f.children().rend(); ++it) stack.push_back(*it);
        continue;
      }
      if (f.is_const()) {
        coeff *= f.value();
        continue;
      }
      Expr b = f;
      long long e = 1;
      if (f.kind() == Kind::IntPow) {
        b = f.child(0);
        e = f.exponent();
      }
      bool merged = false;
      for (auto& [eb, ee] : bases) {
        if (struct_equal(eb, b)) {
          ee += e;
          merged = true;
          break;
        }
      }
      if (!merged) bases.emplace_back(b, e);
    }

    if (coeff == 0) return Expr::integer(0);

    ExprList out;
    out.reserve(bases.size());
    for (auto& [b, e] : bases) {
      if (e == 0) continue;
      Expr f = simplify_pow(b, e);
      if (f.is_const()) {
        coeff *= f.value();
        changed = true;
        continue;
      }
      if (f.kind() == Kind::Product) {
        // pow distributed over a product; rerun collection
        changed = true;
      }
      out.push_back(f);
    }
    if (coeff == 0) return Expr::integer(0);

    if (changed) {
      if (coeff != 1) out.push_back(Expr::constant(coeff));
      factors = std::move(out);
      continue;
    }

    std::sort(out.begin(), out.end(), ExprLess{});
    if (out.empty()) return Expr::constant(coeff);
    if (coeff == 1 && out.size() == 1) return out[0];
    // a bare constant times a sum distributes, keeping sums top-level
    if (coeff != 1 && out.size() == 1 && out[0].kind() == Kind::Sum) {
      ExprList ts;
      ts.reserve(out[0].children().size());
      for (const Expr& t : out[0].children()) {
        auto [c, core] = term_split(t);
        ts.push_back(term_join(coeff * c, core));
      }
      return simplify_sum(std::move(ts));
    }
    ExprList all;
    if (coeff != 1) all.push_back(Expr::constant(coeff));
    all.insert(all.end(), out.begin(), out.end());
    if (all.size() == 1) return all[0];
    return Expr::product(std::move(all));
  }
}

// Splits a canonical non-Sum term into rational coefficient and core.
std::pair<Rational, Expr> term_split(const Expr& t) {
  if (t.is_const()) return {t.value(), Expr::integer(1)};
  if (t.kind() == Kind::Product && t.child(0).is_const()) {
    Rational c = t.child(0).value();
    if (t.children().size() == 2) return {c, t.child(1)};
    ExprList rest(t.children().begin() + 1, t.children().end());
    return {c, Expr::product(std::move(rest))};
  }
  return {Rational(1), t};
}

Expr term_join(const Rational& c, const Expr& core) {
  if (core.is_const(1)) return Expr::constant(c);
  if (c == 1) return core;
  if (core.kind() == Kind::Product) {
    ExprList fs;
    fs.reserve(core.children().size() + 1);
    fs.push_back(Expr::constant(c));
    fs.insert(fs.end(), core.children().begin(), core.children().end());
    return Expr::product(std::move(fs));
  }
  return Expr::product({Expr::constant(c), core});
}

// Terms are already canonical. Flattens, folds constants, merges like cores.
Expr simplify_sum(ExprList terms) {
  for (;;) {
    Rational acc(0);
    std::vector<std::pair<Expr, Rational>> cores;  // insertion order
    bool renest = false;

    std::vector<Expr> stack(terms.rbegin(), terms.rend());
    while (!stack.empty()) {
      Expr t = stack.back();
      stack.pop_back();
      if (t.kind() == Kind::Sum) {
        for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) stack.push_back(*it);
        continue;
      }
      if (t.is_const()) {
        acc += t.value();
        continue;
      }
      auto [c, core] = term_split(t);
      if (core.kind() == Kind::Sum) {
        // coefficient times a sum: distribute and re-collect
        for (auto it = core.children().rbegin(); it != core.children().rend(); ++it) {
          auto [ci, corei] = term_split(*it);
          stack.push_back(term_join(c * ci, corei));
        }
        continue;
      }
      bool merged = false;
      for (auto& [ec, eq] : cores) {
        if (struct_equal(ec, core)) {
          eq += c;
          merged = true;
          break;
        }
      }
      if (!merged) cores.emplace_back(core, c);
    }

    ExprList out;
    out.reserve(cores.size() + 1);
    for (auto& [core, q] : cores) {
      if (q == 0) continue;
      Expr t = term_join(q, core);
      if (t.kind() == Kind::Sum || t.is_const()) renest = true;  // core was a Sum with coefficient 1
      out.push_back(t);
    }

    if (renest) {
      if (acc != 0) out.push_back(Expr::constant(acc));
      terms = std::move(out);
      continue;
    }

    std::sort(out.begin(), out.end(), ExprLess{});
    if (out.empty()) return Expr::constant(acc);
    if (acc == 0 && out.size() == 1) return out[0];
    ExprList all;
    if (acc != 0) all.push_back(Expr::constant(acc));
    all.insert(all.end(), out.begin(), out.end());
    if (all.size() == 1) return all[0];
    return Expr::sum(std::move(all));
  }
}

}  // namespace

Expr simplify(const Expr& e) {
  switch (e.kind()) {
    case Kind::Const:
    case Kind::Symbol:
      return e;
    case Kind::Exp: {
      Expr a = simplify(e.child(0));
      if (a.is_const(0)) return Expr::integer(1);
      return Expr::exp(a);
    }
    case Kind::Tanh: {
      Expr a = simplify(e.child(0));
      if (a.is_const(0)) return Expr::integer(0);
      return Expr::tanh(a);
    }
    case Kind::Sech: {
      Expr a = simplify(e.child(0));
      if (a.is_const(0)) return Expr::integer(1);
      return Expr::sech(a);
    }
    case Kind::Cosh: {
      Expr a = simplify(e.child(0));
      if (a.is_const(0)) return Expr::integer(1);
      return Expr::cosh(a);
    }
    case Kind::Sinh: {
      Expr a = simplify(e.child(0));
      if (a.is_const(0)) return Expr::integer(0);
      return Expr::sinh(a);
    }
    case Kind::IntPow:
      return simplify_pow(simplify(e.child(0)), e.exponent());
    case Kind::Product: {
      ExprList fs;
      fs.reserve(e.children().size());
      for (const Expr& k : e.children()) fs.push_back(simplify(k));
      return simplify_product(std::move(fs));
    }
    case Kind::Sum: {
      ExprList ts;
      ts.reserve(e.children().size());
      for (const Expr& k : e.children()) ts.push_back(simplify(k));
      return simplify_sum(std::move(ts));
    }
    case Kind::Dx:
      return Expr::dx(simplify(e.child(0)));
    case Kind::Dxx:
      return Expr::dxx(simplify(e.child(0)));
    case Kind::Shift: {
      Expr a = simplify(e.child(0));
      if (e.offset() == 0) return a;
      return Expr::shift(a, e.offset());
    }
  }
  throw EngineError("unhandled node kind in simplify");
}

}  // namespace taycheck
