#include "taycheck/poly.hpp"

#include <algorithm>

#include "taycheck/errors.hpp"

namespace taycheck {

Poly Poly::constant(int nvars, const Rational& q) {
  Poly p(nvars);
  if (q != 0) p.terms_.emplace(Mono(nvars, 0), q);
  return p;
}

Poly Poly::variable(int nvars, int index, int power) {
  Poly p(nvars);
  Mono m(nvars, 0);
  m[index] = power;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Poly Poly::monomial(int nvars, Mono m, const Rational& q) {
  Poly p(nvars);
  if (q != 0) p.terms_.emplace(std::move(m), q);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Mono& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, q] : o.terms_) r.add_term(m, q);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, q] : o.terms_) r.add_term(m, -q);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, q] : terms_) r.terms_.emplace(m, -q);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [ma, qa] : terms_) {
    for (const auto& [mb, qb] : o.terms_) {
      Mono m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, qa * qb);
    }
  }
  return r;
}

Poly Poly::mul_scalar(const Rational& q) const {
  if (q == 0) return Poly(nvars_);
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * q);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = constant(nvars_, Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

int Poly::degree(int v) const {
  int d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m[v]);
  return d;
}

Mono Poly::min_exponents() const {
  Mono out(nvars_, 0);
  bool first = true;
  for (const auto& [m, q] : terms_) {
    if (first) {
      out = m;
      first = false;
    } else {
      for (int i = 0; i < nvars_; ++i) out[i] = std::min(out[i], m[i]);
    }
  }
  return out;
}

Poly Poly::shift_exponents(const Mono& delta) const {
  Poly r(nvars_);
  for (const auto& [m, q] : terms_) {
    Mono nm(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      nm[i] = m[i] + delta[i];
      if (nm[i] < 0) throw EngineError("negative exponent after monomial shift");
    }
    r.terms_.emplace(std::move(nm), q);
  }
  return r;
}

Rational Poly::content() const {
  Rational g(0);
  for (const auto& [m, q] : terms_) {
    g = rational_gcd(g, q);
    if (g == 1) break;
  }
  return g;
}

bool poly_divide(const Poly& a, const Poly& b, Poly& quotient) {
  if (b.is_zero()) return false;
  const int n = a.nvars();
  Poly q(n);
  Poly rem = a;
  // leading term of b in the map's lexicographic order: last element
  const auto& lead_b = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& lead_r = *rem.terms().rbegin();
    Mono dm(n);
    for (int i = 0; i < n; ++i) {
      dm[i] = lead_r.first[i] - lead_b.first[i];
      if (dm[i] < 0) return false;
    }
    Rational dc = lead_r.second / lead_b.second;
    Poly t = Poly::monomial(n, dm, dc);
    q = q + t;
    rem = rem - t * b;
  }
  quotient = std::move(q);
  return true;
}

namespace {

// Coefficient of v^d, viewed as a polynomial in the remaining variables
// (the v-slot of every monomial is zeroed).
Poly coeff_of(const Poly& p, int v, int d) {
  Poly out(p.nvars());
  for (const auto& [m, q] : p.terms()) {
    if (m[v] != d) continue;
    Mono nm = m;
    nm[v] = 0;
    out.add_term(nm, q);
  }
  return out;
}

// Highest variable index used by either polynomial, or -1 when both are
// effectively constant.
int main_variable(const Poly& a, const Poly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  return -1;
}

Poly gcd_rec(Poly a, Poly b);

// gcd of the v-coefficients of p (the content of p wrt v).
Poly content_wrt(const Poly& p, int v) {
  Poly g(p.nvars());
  for (int d = 0; d <= p.degree(v); ++d) {
    Poly c = coeff_of(p, v, d);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  Poly q(a.nvars());
  if (!poly_divide(a, b, q)) throw EngineError("inexact polynomial division in gcd");
  return q;
}

// Sign of the lexicographically-leading coefficient.
int lead_sign(const Poly& p) {
  if (p.is_zero()) return 0;
  return p.terms().rbegin()->second < 0 ? -1 : 1;
}

// Primitive part with positive leading coefficient.
Poly normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = p.content();
  if (lead_sign(p) < 0) c = -c;
  return p.mul_scalar(Rational(1) / c);
}

// Pseudo-remainder of a by b with respect to variable v (deg_v a >= deg_v b).
Poly pseudo_rem(Poly a, const Poly& b, int v) {
  const int db = b.degree(v);
  Poly lcb = coeff_of(b, v, db);
  while (!a.is_zero() && a.degree(v) >= db) {
    int da = a.degree(v);
    Poly lca = coeff_of(a, v, da);
    // a <- lcb*a - lca*v^(da-db)*b  kills the leading v-term
    Poly shift = Poly::variable(a.nvars(), v, da - db);
    a = a * lcb - b * shift * lca;
  }
  return a;
}

Poly gcd_rec(Poly a, Poly b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  int v = main_variable(a, b);
  if (v < 0) return Poly::constant(a.nvars(), Rational(1));  // both constant, nonzero

  if (a.degree(v) == 0 || b.degree(v) == 0) {
    // one side is free of the main variable: gcd divides its content wrt v
    Poly ca = a.degree(v) == 0 ? a : content_wrt(a, v);
    Poly cb = b.degree(v) == 0 ? b : content_wrt(b, v);
    return gcd_rec(ca, cb);
  }

  Poly ca = content_wrt(a, v);
  Poly cb = content_wrt(b, v);
  Poly g = gcd_rec(ca, cb);
  a = normalize(divide_exact(a, ca));
  b = normalize(divide_exact(b, cb));
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = pseudo_rem(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = Poly(a.nvars());
    } else {
      Poly cr = content_wrt(r, v);
      b = normalize(divide_exact(r, cr));
    }
  }
  return normalize(g * a);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw EngineError("gcd over mismatched variable universes");
  return gcd_rec(a, b);
}

}  // namespace taycheck
