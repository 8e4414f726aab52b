#include "taycheck/series.hpp"

#include <algorithm>
#include <cmath>

#include "taycheck/errors.hpp"

namespace taycheck {

namespace {

using Coeffs = std::vector<Expr>;  // index j holds the t^j coefficient

struct Ctx {
  const std::map<std::string, Coeffs>& fields;
  const std::string& space;
  int trunc;  // highest t power carried
};

Coeffs zero_series(int trunc) { return Coeffs(trunc + 1, Expr::integer(0)); }

Coeffs const_series(Expr e, int trunc) {
  Coeffs out = zero_series(trunc);
  out[0] = std::move(e);
  return out;
}

bool tail_is_zero(const Coeffs& a) {
  for (std::size_t j = 1; j < a.size(); ++j)
    if (!a[j].is_const(0)) return false;
  return true;
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = simplify(Expr::sum({a[j], b[j]}));
  return out;
}

Coeffs mul(const Coeffs& a, const Coeffs& b, int trunc) {
  Coeffs out(trunc + 1);
  for (int j = 0; j <= trunc; ++j) {
    ExprList terms;
    for (int i = 0; i <= j; ++i) {
      if (a[i].is_const(0) || b[j - i].is_const(0)) continue;
      terms.push_back(Expr::product({a[i], b[j - i]}));
    }
    out[j] = terms.empty() ? Expr::integer(0) : simplify(Expr::sum(std::move(terms)));
  }
  return out;
}

// 1 / a as a series; a[0] must not be the literal zero.
Coeffs invert(const Coeffs& a, int trunc) {
  Coeffs out(trunc + 1);
  out[0] = simplify(Expr::pow(a[0], -1));  // throws DegenerateExpression on literal 0
  for (int j = 1; j <= trunc; ++j) {
    ExprList terms;
    for (int i = 1; i <= j; ++i) {
      if (a[i].is_const(0) || out[j - i].is_const(0)) continue;
      terms.push_back(Expr::product({a[i], out[j - i]}));
    }
    if (terms.empty()) {
      out[j] = Expr::integer(0);
    } else {
      out[j] = simplify(Expr::product({Expr::integer(-1), out[0], Expr::sum(std::move(terms))}));
    }
  }
  return out;
}

Coeffs ipow(const Coeffs& a, long long e, int trunc) {
  if (e < 0) {
    Coeffs inv = invert(a, trunc);
    return ipow(inv, -e, trunc);
  }
  Coeffs acc = const_series(Expr::integer(1), trunc);
  Coeffs base = a;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc = mul(acc, base, trunc);
    base = mul(base, base, trunc);
    n >>= 1;
  }
  return acc;
}

// exp(a) by the standard derivative recurrence; a may have a symbolic head.
Coeffs exp_series(const Coeffs& a, int trunc) {
  Coeffs out(trunc + 1);
  out[0] = simplify(Expr::exp(a[0]));
  for (int j = 1; j <= trunc; ++j) {
    ExprList terms;
    for (int m = 1; m <= j; ++m) {
      if (a[m].is_const(0) || out[j - m].is_const(0)) continue;
      terms.push_back(Expr::product({Expr::integer(m), a[m], out[j - m]}));
    }
    out[j] = terms.empty()
                 ? Expr::integer(0)
                 : simplify(Expr::product({Expr::constant(Rational(1, j)), Expr::sum(std::move(terms))}));
  }
  return out;
}

// sinh and cosh advance together: S' = A'·C, C' = A'·S.
void sinh_cosh_series(const Coeffs& a, int trunc, Coeffs& s, Coeffs& c) {
  s.assign(trunc + 1, Expr::integer(0));
  c.assign(trunc + 1, Expr::integer(0));
  s[0] = simplify(Expr::sinh(a[0]));
  c[0] = simplify(Expr::cosh(a[0]));
  for (int j = 1; j <= trunc; ++j) {
    ExprList st, ct;
    for (int m = 1; m <= j; ++m) {
      if (a[m].is_const(0)) continue;
      if (!c[j - m].is_const(0)) st.push_back(Expr::product({Expr::integer(m), a[m], c[j - m]}));
      if (!s[j - m].is_const(0)) ct.push_back(Expr::product({Expr::integer(m), a[m], s[j - m]}));
    }
    Rational inv(1, j);
    s[j] = st.empty() ? Expr::integer(0)
                      : simplify(Expr::product({Expr::constant(inv), Expr::sum(std::move(st))}));
    c[j] = ct.empty() ? Expr::integer(0)
                      : simplify(Expr::product({Expr::constant(inv), Expr::sum(std::move(ct))}));
  }
}

Coeffs expand(const Expr& e, const Ctx& ctx);

Coeffs expand_children_unary(const Expr& e, const Ctx& ctx) { return expand(e.child(0), ctx); }

Coeffs expand(const Expr& e, const Ctx& ctx) {
  switch (e.kind()) {
    case Kind::Const:
      return const_series(e, ctx.trunc);
    case Kind::Symbol: {
      auto it = ctx.fields.find(e.name());
      if (it == ctx.fields.end()) return const_series(e, ctx.trunc);
      Coeffs out(ctx.trunc + 1, Expr::integer(0));
      for (int j = 0; j <= ctx.trunc && j < static_cast<int>(it->second.size()); ++j)
        out[j] = it->second[j];
      return out;
    }
    case Kind::Sum: {
      Coeffs acc = zero_series(ctx.trunc);
      for (const Expr& k : e.children()) acc = add(acc, expand(k, ctx));
      return acc;
    }
    case Kind::Product: {
      Coeffs acc = const_series(Expr::integer(1), ctx.trunc);
      for (const Expr& k : e.children()) acc = mul(acc, expand(k, ctx), ctx.trunc);
      return acc;
    }
    case Kind::IntPow:
      return ipow(expand(e.child(0), ctx), e.exponent(), ctx.trunc);
    case Kind::Exp: {
      Coeffs a = expand_children_unary(e, ctx);
      if (tail_is_zero(a)) return const_series(simplify(Expr::exp(a[0])), ctx.trunc);
      return exp_series(a, ctx.trunc);
    }
    case Kind::Sinh:
    case Kind::Cosh:
    case Kind::Tanh:
    case Kind::Sech: {
      Coeffs a = expand_children_unary(e, ctx);
      if (tail_is_zero(a)) {
        Expr head;
        switch (e.kind()) {
          case Kind::Sinh: head = Expr::sinh(a[0]); break;
          case Kind::Cosh: head = Expr::cosh(a[0]); break;
          case Kind::Tanh: head = Expr::tanh(a[0]); break;
          default: head = Expr::sech(a[0]); break;
        }
        return const_series(simplify(head), ctx.trunc);
      }
      Coeffs s, c;
      sinh_cosh_series(a, ctx.trunc, s, c);
      switch (e.kind()) {
        case Kind::Sinh: return s;
        case Kind::Cosh: return c;
        case Kind::Tanh: return mul(s, invert(c, ctx.trunc), ctx.trunc);
        default: return invert(c, ctx.trunc);
      }
    }
    case Kind::Dx: {
      Coeffs a = expand_children_unary(e, ctx);
      for (Expr& cj : a) cj = differentiate(cj, ctx.space);
      return a;
    }
    case Kind::Dxx: {
      Coeffs a = expand_children_unary(e, ctx);
      for (Expr& cj : a) cj = differentiate(differentiate(cj, ctx.space), ctx.space);
      return a;
    }
    case Kind::Shift: {
      Coeffs a = expand_children_unary(e, ctx);
      Expr moved = simplify(Expr::sum({Expr::symbol(ctx.space), Expr::integer(e.offset())}));
      for (Expr& cj : a) cj = substitute(cj, ctx.space, moved);
      return a;
    }
  }
  throw EngineError("unhandled node kind in series expansion");
}

}  // namespace

std::map<std::string, TimeSeries> taylor_expand(const ProblemSpec& spec, int order,
                                                const SeriesOptions& opt) {
  if (order < 0) throw EngineError("series order must be nonnegative");
  std::map<std::string, Coeffs> state;
  for (const std::string& f : spec.fields) state[f] = {simplify(spec.init.at(f))};

  for (int j = 0; j < order; ++j) {
    Ctx ctx{state, spec.space, j};
    std::map<std::string, Expr> next;
    for (const std::string& f : spec.fields) {
      Coeffs r = expand(spec.rhs.at(f), ctx);
      Expr cj = simplify(Expr::product({Expr::constant(Rational(1, j + 1)), r[j]}));
      if (cj.nodes() > opt.node_budget)
        throw OrderOverflow("coefficient t^" + std::to_string(j + 1) + " of field '" + f +
                            "' exceeds the node budget (" + std::to_string(cj.nodes()) + " > " +
                            std::to_string(opt.node_budget) + ")");
      next.emplace(f, std::move(cj));
    }
    for (const std::string& f : spec.fields) state[f].push_back(next.at(f));
  }

  std::map<std::string, TimeSeries> out;
  for (const std::string& f : spec.fields)
    out.emplace(f, TimeSeries{f, spec.kind, spec.space, std::move(state.at(f))});
  return out;
}

std::map<std::string, TimeSeries> pde_taylor(const ProblemSpec& spec, int order,
                                             const SeriesOptions& opt) {
  return taylor_expand(spec, order, opt);
}

TimeSeries dde_taylor(const ProblemSpec& spec, int order, const SeriesOptions& opt) {
  auto all = taylor_expand(spec, order, opt);
  return all.at(spec.fields.front());
}

Real series_eval(const TimeSeries& ts, const Rational& space_value, const Rational& t,
                 const Bindings& params, unsigned digits) {
  Bindings b = params;
  b[ts.space] = space_value;
  unsigned work = std::max(digits, kMinDigits) + 10;
  Real acc(0, work);
  Real tv(t, work);
  Real tp(1, work);
  for (const Expr& c : ts.coeffs) {
    acc += eval(c, b, work) * tp;
    tp *= tv;
  }
  acc.precision(std::max(digits, kMinDigits));
  return acc;
}

Expr series_as_expr(const TimeSeries& ts) {
  ExprList terms;
  Expr t = Expr::symbol("t");
  for (std::size_t j = 0; j < ts.coeffs.size(); ++j) {
    if (ts.coeffs[j].is_const(0)) continue;
    if (j == 0)
      terms.push_back(ts.coeffs[0]);
    else
      terms.push_back(Expr::product({ts.coeffs[j], Expr::pow(t, static_cast<long long>(j))}));
  }
  if (terms.empty()) return Expr::integer(0);
  return simplify(Expr::sum(std::move(terms)));
}

Expr series_defect(const ProblemSpec& spec, const std::map<std::string, TimeSeries>& series,
                   const std::string& field) {
  Expr rhs = spec.rhs.at(field);
  for (const std::string& f : spec.fields) rhs = substitute(rhs, f, series_as_expr(series.at(f)));
  rhs = simplify(resolve_operators(rhs, spec.space));
  Expr lhs = differentiate(series_as_expr(series.at(field)), "t");
  return simplify(Expr::sum({lhs, Expr::product({Expr::integer(-1), rhs})}));
}

std::vector<Expr> defect_coefficients(const ProblemSpec& spec,
                                      const std::map<std::string, TimeSeries>& series,
                                      const std::string& field, int upto) {
  Expr defect = series_defect(spec, series, field);
  std::vector<Expr> out;
  Rational fact(1);
  Expr cur = defect;
  for (int m = 0; m <= upto; ++m) {
    if (m > 0) {
      cur = differentiate(cur, "t");
      fact *= m;
    }
    Expr at0 = substitute(cur, "t", Expr::integer(0));
    out.push_back(simplify(Expr::product({Expr::constant(Rational(1) / fact), at0})));
  }
  return out;
}

ResidualOrderResult residual_order(const ProblemSpec& spec,
                                   const std::map<std::string, TimeSeries>& series,
                                   const std::vector<Rational>& t_samples,
                                   const std::vector<Rational>& space_samples,
                                   const Bindings& params, unsigned digits) {
  std::vector<Expr> defects;
  for (const std::string& f : spec.fields) defects.push_back(series_defect(spec, series, f));

  ResidualOrderResult res;
  unsigned work = std::max(digits, kDefaultDigits);
  for (const Rational& t : t_samples) {
    Real worst(0, work);
    for (const Rational& xv : space_samples) {
      Bindings b = params;
      b[spec.space] = xv;
      b["t"] = t;
      for (const Expr& d : defects) {
        Real v = abs(eval(d, b, work));
        if (v > worst) worst = v;
      }
    }
    res.samples.emplace_back(static_cast<double>(t), worst.convert_to<double>());
  }

  std::vector<std::pair<double, double>> fit;
  for (auto& [t, r] : res.samples)
    if (r > 1e-30) fit.emplace_back(std::log(t), std::log(r));
  if (fit.size() < 2) {
    res.exact = true;
    return res;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [x, y] : fit) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(fit.size());
  res.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return res;
}

}  // namespace taycheck
