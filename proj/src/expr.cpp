#include "taycheck/expr.hpp"

#include <functional>

namespace taycheck {

namespace {

std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_rational(const Rational& q) {
  std::hash<std::string> hs;
  Rational copy = q;
  return hs(copy.str());
}

}  // namespace

Expr Expr::make(ExprNode&& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ULL;
  std::size_t count = 1;
  switch (n.kind) {
    case Kind::Const:
      h = hash_combine(h, hash_rational(n.value));
      break;
    case Kind::Symbol:
      h = hash_combine(h, std::hash<std::string>{}(n.name));
      break;
    default:
      break;
  }
  h = hash_combine(h, static_cast<std::size_t>(n.aux));
  for (const Expr& k : n.kids) {
    h = hash_combine(h, k.hash());
    count += k.nodes();
  }
  n.hash = h;
  n.nodes = count;
  return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr::Expr() : Expr(constant(Rational(0))) {}

Expr Expr::constant(Rational q) {
  ExprNode n;
  n.kind = Kind::Const;
  n.value = std::move(q);
  return make(std::move(n));
}

Expr Expr::integer(long long v) { return constant(Rational(v)); }

Expr Expr::symbol(std::string name) {
  ExprNode n;
  n.kind = Kind::Symbol;
  n.name = std::move(name);
  return make(std::move(n));
}

Expr Expr::sum(ExprList terms) {
  ExprNode n;
  n.kind = Kind::Sum;
  n.kids = std::move(terms);
  return make(std::move(n));
}

Expr Expr::product(ExprList factors) {
  ExprNode n;
  n.kind = Kind::Product;
  n.kids = std::move(factors);
  return make(std::move(n));
}

Expr Expr::pow(Expr base, long long exponent) {
  ExprNode n;
  n.kind = Kind::IntPow;
  n.aux = exponent;
  n.kids = {std::move(base)};
  return make(std::move(n));
}

Expr Expr::exp(Expr arg) {
  ExprNode n;
  n.kind = Kind::Exp;
  n.kids = {std::move(arg)};
  return make(std::move(n));
}

Expr Expr::tanh(Expr arg) {
  ExprNode n;
  n.kind = Kind::Tanh;
  n.kids = {std::move(arg)};
  return make(std::move(n));
}

Expr Expr::sech(Expr arg) {
  ExprNode n;
  n.kind = Kind::Sech;
  n.kids = {std::move(arg)};
  return make(std::move(n));
}

Expr Expr::cosh(Expr arg) {
  ExprNode n;
  n.kind = Kind::Cosh;
  n.kids = {std::move(arg)};
  return make(std::move(n));
}

Expr Expr::sinh(Expr arg) {
  ExprNode n;
  n.kind = Kind::Sinh;
  n.kids = {std::move(arg)};
  return make(std::move(n));
}

Expr Expr::dx(Expr arg) {
  ExprNode n;
  n.kind = Kind::Dx;
  n.kids = {std::move(arg)};
  return make(std::move(n));
}

Expr Expr::dxx(Expr arg) {
  ExprNode n;
  n.kind = Kind::Dxx;
  n.kids = {std::move(arg)};
  return make(std::move(n));
}

Expr Expr::shift(Expr arg, long long offset) {
  ExprNode n;
  n.kind = Kind::Shift;
  n.aux = offset;
  n.kids = {std::move(arg)};
  return make(std::move(n));
}

int compare(const Expr& a, const Expr& b) {
  if (&a == &b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Const: {
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    }
    case Kind::Symbol:
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    default:
      break;
  }
  if (a.exponent() != b.exponent()) return a.exponent() < b.exponent() ? -1 : 1;
  const ExprList& ka = a.children();
  const ExprList& kb = b.children();
  std::size_t n = std::min(ka.size(), kb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(ka[i], kb[i]);
    if (c != 0) return c;
  }
  if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
  return 0;
}

bool struct_equal(const Expr& a, const Expr& b) {
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

namespace {
void collect_symbols(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == Kind::Symbol) {
    out.insert(e.name());
    return;
  }
  for (const Expr& k : e.children()) collect_symbols(k, out);
}
}  // namespace

std::set<std::string> free_symbols(const Expr& e) {
  std::set<std::string> out;
  collect_symbols(e, out);
  return out;
}

bool contains_kind(const Expr& e, Kind k) {
  if (e.kind() == k) return true;
  for (const Expr& c : e.children())
    if (contains_kind(c, k)) return true;
  return false;
}

bool depends_on(const Expr& e, const std::string& sym) {
  if (e.kind() == Kind::Symbol) return e.name() == sym;
  for (const Expr& c : e.children())
    if (depends_on(c, sym)) return true;
  return false;
}

}  // namespace taycheck
