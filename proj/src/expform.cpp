#include "taycheck/expform.hpp"

#include <algorithm>
#include <map>

#include "taycheck/errors.hpp"

namespace taycheck {

namespace {

constexpr long long kAtomPowerCap = 100000;

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

// Rational content of a canonical term: term == content * primitive where the
// primitive carries no leading rational coefficient.
std::pair<Rational, Expr> content_split(const Expr& term) {
  if (term.is_const()) return {term.value(), Expr::integer(1)};
  if (term.kind() == Kind::Product && term.child(0).is_const()) {
    Rational c = term.child(0).value();
    if (term.children().size() == 2) return {c, term.child(1)};
    ExprList rest(term.children().begin() + 1, term.children().end());
    return {c, Expr::product(std::move(rest))};
  }
  return {Rational(1), term};
}

std::vector<Expr> sum_terms(const Expr& e) {
  if (e.kind() == Kind::Sum) return e.children();
  return {e};
}

// First pass: gather every exp argument (from Exp nodes and hyperbolic
// arguments alike), split into terms, and record per-primitive content gcds.
void collect_atoms(const Expr& e, std::map<Expr, Rational, ExprLess>& units) {
  switch (e.kind()) {
    case Kind::Exp:
    case Kind::Tanh:
    case Kind::Sech:
    case Kind::Cosh:
    case Kind::Sinh: {
      for (const Expr& term : sum_terms(e.child(0))) {
        auto [q, prim] = content_split(term);
        if (q == 0) continue;
        auto [it, fresh] = units.emplace(prim, abs(q));
        if (!fresh) it->second = rational_gcd(it->second, q);
      }
      collect_atoms(e.child(0), units);
      return;
    }
    case Kind::Dx:
    case Kind::Dxx:
    case Kind::Shift:
      throw UnresolvedOperator("operator nodes have no exponential-atom form");
    default:
      for (const Expr& k : e.children()) collect_atoms(k, units);
  }
}

struct RF {
  Poly num;
  Poly den;
};

void cancel_monomial(RF& f, int nvars) {
  Mono mn = f.num.min_exponents();
  Mono md = f.den.min_exponents();
  Mono delta(nvars, 0);
  bool any = false;
  for (int i = 0; i < nvars; ++i) {
    delta[i] = -std::min(mn[i], md[i]);
    any = any || delta[i] != 0;
  }
  if (!any) return;
  f.num = f.num.shift_exponents(delta);
  f.den = f.den.shift_exponents(delta);
}

struct Builder {
  const AtomTable& table;
  int nvars;
  std::map<std::string, int> symbol_index;
  std::map<Expr, std::pair<int, Rational>, ExprLess> atom_index;  // primitive -> (var, unit)

  explicit Builder(const AtomTable& t) : table(t), nvars(t.nvars()) {
    for (std::size_t i = 0; i < t.atoms.size(); ++i)
      atom_index.emplace(t.atoms[i].primitive, std::make_pair(static_cast<int>(i), t.atoms[i].unit));
    for (std::size_t i = 0; i < t.symbols.size(); ++i)
      symbol_index.emplace(t.symbols[i], static_cast<int>(t.atoms.size() + i));
  }

  RF one() const { return {Poly::constant(nvars, Rational(1)), Poly::constant(nvars, Rational(1))}; }

  RF add(const RF& a, const RF& b) const {
    RF r{a.num * b.den + b.num * a.den, a.den * b.den};
    cancel_monomial(r, nvars);
    return r;
  }

  RF mul(const RF& a, const RF& b) const {
    RF r{a.num * b.num, a.den * b.den};
    cancel_monomial(r, nvars);
    return r;
  }

  RF pow(const RF& a, long long e) const {
    if (e == 0) return one();
    bool inv = e < 0;
    unsigned long long n = inv ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
    if (inv && a.num.is_zero())
      throw DegenerateExpression("reciprocal of an expression that is identically zero");
    RF base = inv ? RF{a.den, a.num} : a;
    RF acc = one();
    while (n) {
      if (n & 1) acc = mul(acc, base);
      base = mul(base, base);
      n >>= 1;
    }
    return acc;
  }

  // exp(arg) as a Laurent monomial in the atoms, returned as an RF.
  RF exp_monomial(const Expr& arg) const {
    Mono up(nvars, 0), down(nvars, 0);
    for (const Expr& term : sum_terms(arg)) {
      auto [q, prim] = content_split(term);
      if (q == 0) continue;
      auto it = atom_index.find(prim);
      if (it == atom_index.end()) throw AtomMergeFailure("exp argument term missing from atom table");
      Rational k = q / it->second.second;
      if (denominator(k) != 1) throw AtomMergeFailure("non-integer atom power after unit merge");
      BigInt kn = numerator(k);
      if (abs(kn) > kAtomPowerCap) throw AtomMergeFailure("atom power beyond the merge cap");
      long long e = kn.convert_to<long long>();
      if (e > 0)
        up[it->second.first] += static_cast<int>(e);
      else
        down[it->second.first] += static_cast<int>(-e);
    }
    return {Poly::monomial(nvars, up, Rational(1)), Poly::monomial(nvars, down, Rational(1))};
  }

  RF build(const Expr& e) const {
    switch (e.kind()) {
      case Kind::Const:
        return {Poly::constant(nvars, e.value()), Poly::constant(nvars, Rational(1))};
      case Kind::Symbol: {
        auto it = symbol_index.find(e.name());
        if (it == symbol_index.end()) throw EngineError("symbol missing from atom table");
        return {Poly::variable(nvars, it->second), Poly::constant(nvars, Rational(1))};
      }
      case Kind::Exp:
        return exp_monomial(e.child(0));
      case Kind::Tanh: {
        RF e2 = pow(exp_monomial(e.child(0)), 2);
        return mul(sub(e2, one()), pow(add(e2, one()), -1));
      }
      case Kind::Sech: {
        RF ex = exp_monomial(e.child(0));
        RF two{Poly::constant(nvars, Rational(2)), Poly::constant(nvars, Rational(1))};
        return mul(mul(two, ex), pow(add(pow(ex, 2), one()), -1));
      }
      case Kind::Cosh: {
        RF ex = exp_monomial(e.child(0));
        RF half{Poly::constant(nvars, Rational(1, 2)), Poly::constant(nvars, Rational(1))};
        return mul(half, mul(add(pow(ex, 2), one()), pow(ex, -1)));
      }
      case Kind::Sinh: {
        RF ex = exp_monomial(e.child(0));
        RF half{Poly::constant(nvars, Rational(1, 2)), Poly::constant(nvars, Rational(1))};
        return mul(half, mul(sub(pow(ex, 2), one()), pow(ex, -1)));
      }
      case Kind::IntPow:
        return pow(build(e.child(0)), e.exponent());
      case Kind::Product: {
        RF acc = one();
        for (const Expr& k : e.children()) acc = mul(acc, build(k));
        return acc;
      }
      case Kind::Sum: {
        RF acc{Poly::constant(nvars, Rational(0)), Poly::constant(nvars, Rational(1))};
        for (const Expr& k : e.children()) acc = add(acc, build(k));
        return acc;
      }
      case Kind::Dx:
      case Kind::Dxx:
      case Kind::Shift:
        throw UnresolvedOperator("operator nodes have no exponential-atom form");
    }
    throw EngineError("unhandled node kind in atom builder");
  }

  RF sub(const RF& a, const RF& b) const {
    RF nb{-b.num, b.den};
    return add(a, nb);
  }
};

AtomTable make_table(const Expr& canonical) {
  std::map<Expr, Rational, ExprLess> units;
  collect_atoms(canonical, units);
  AtomTable t;
  for (const auto& [prim, unit] : units) t.atoms.push_back({prim, unit});
  for (const std::string& s : free_symbols(canonical)) t.symbols.push_back(s);
  return t;
}

RF build_form(const Expr& canonical, const AtomTable& table) {
  Builder b(table);
  return b.build(canonical);
}

int lead_sign(const Poly& p) {
  if (p.is_zero()) return 0;
  return p.terms().rbegin()->second < 0 ? -1 : 1;
}

}  // namespace

RationalFunctionForm to_exp_atoms(const Expr& e) {
  Expr s = simplify(e);
  RationalFunctionForm out;
  out.table = make_table(s);
  RF f = build_form(s, out.table);
  if (f.den.is_zero()) throw DegenerateExpression("denominator vanished while building atom form");
  if (f.num.is_zero()) {
    out.num = Poly::constant(out.table.nvars(), Rational(0));
    out.den = Poly::constant(out.table.nvars(), Rational(1));
    return out;
  }
  Poly g = poly_gcd(f.num, f.den);
  if (!g.is_constant()) {
    Poly qn(out.table.nvars()), qd(out.table.nvars());
    if (!poly_divide(f.num, g, qn) || !poly_divide(f.den, g, qd))
      throw EngineError("gcd does not divide its inputs");
    f.num = std::move(qn);
    f.den = std::move(qd);
  }
  // canonical scaling: den primitive with positive leading coefficient
  Rational c = f.den.content();
  if (lead_sign(f.den) < 0) c = -c;
  out.num = f.num.mul_scalar(Rational(1) / c);
  out.den = f.den.mul_scalar(Rational(1) / c);
  return out;
}

Real form_eval(const RationalFunctionForm& f, const Bindings& b, unsigned digits) {
  unsigned work = std::max(digits, kMinDigits) + 10;
  std::vector<Real> vals;
  vals.reserve(f.table.nvars());
  for (const Atom& a : f.table.atoms) {
    Expr scaled = simplify(Expr::product({Expr::constant(a.unit), a.primitive}));
    vals.push_back(exp(eval(scaled, b, work)));
  }
  for (const std::string& s : f.table.symbols) {
    auto it = b.find(s);
    if (it == b.end()) throw UnboundSymbol("no binding for symbol '" + s + "'");
    vals.push_back(Real(it->second, work));
  }
  auto poly_val = [&](const Poly& p) {
    Real acc(0, work);
    for (const auto& [m, q] : p.terms()) {
      Real t(q, work);
      for (int i = 0; i < p.nvars(); ++i)
        for (int k = 0; k < m[i]; ++k) t *= vals[i];
      acc += t;
    }
    return acc;
  };
  Real den = poly_val(f.den);
  if (den == 0) throw PoleEvaluation("form denominator evaluates to zero");
  Real v = poly_val(f.num) / den;
  v.precision(std::max(digits, kMinDigits));
  return v;
}

namespace {

// Builds the uncancelled form; zero numerator here already proves zero.
bool numerator_vanishes(const Expr& canonical) {
  AtomTable t = make_table(canonical);
  RF f = build_form(canonical, t);
  if (f.den.is_zero()) throw DegenerateExpression("denominator vanished while building atom form");
  return f.num.is_zero();
}

ZeroVerdict sample_verdict(const Expr& canonical, const std::vector<Bindings>& samples,
                           unsigned digits) {
  ZeroVerdict v;
  v.state = ZeroState::Unknown;
  unsigned work = std::max({digits, kDefaultDigits, kMinDigits});
  std::optional<Witness> best;
  for (const Bindings& b : samples) {
    try {
      Real val = eval(canonical, b, work);
      ++v.samples_used;
      Real mag = abs(val);
      if (!best || mag > best->magnitude) best = Witness{b, mag};
    } catch (const PoleEvaluation&) {
      ++v.poles_skipped;
    }
  }
  if (best && best->magnitude > Real(kNonZeroThreshold, work)) {
    v.state = ZeroState::ProvenNonZero;
    v.witness = best;
  }
  return v;
}

std::vector<Bindings> default_samples(const Expr& e) {
  std::set<std::string> syms = free_symbols(e);
  std::vector<Bindings> out;
  SplitMix64 rng(0x5eed0f00dULL);
  const int kSamples = 12;
  for (int i = 0; i < kSamples; ++i) {
    Bindings b;
    for (const std::string& s : syms) {
      long long num = static_cast<long long>(rng.below(9)) - 4;
      long long den = 1 + static_cast<long long>(rng.below(4));
      if (num == 0) num = 1 + static_cast<long long>(rng.below(3));
      b[s] = Rational(num, den);
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

ZeroVerdict is_zero_over(const Expr& e, const std::vector<Bindings>& samples, unsigned digits) {
  Expr s = simplify(e);
  ZeroVerdict v;
  try {
    if (numerator_vanishes(s)) {
      v.state = ZeroState::ProvenZero;
      v.symbolic = true;
      return v;
    }
  } catch (const AtomMergeFailure&) {
    // fall through to sampling; merge failure alone cannot prove anything
  }
  return sample_verdict(s, samples, digits);
}

ZeroVerdict is_zero(const Expr& e, unsigned digits) {
  Expr s = simplify(e);
  return is_zero_over(s, default_samples(s), digits);
}

}  // namespace taycheck
