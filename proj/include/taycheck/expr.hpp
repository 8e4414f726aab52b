#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "taycheck/rational.hpp"

namespace taycheck {

enum class Kind : std::uint8_t {
  Const,
  Symbol,
  Exp,
  Tanh,
  Sech,
  Cosh,
  Sinh,
  IntPow,
  Product,
  Sum,
  Dx,
  Dxx,
  Shift,
};

class Expr;
using ExprList = std::vector<Expr>;

struct ExprNode {
  Kind kind;
  Rational value;        // Const only
  std::string name;      // Symbol only
  long long aux = 0;     // IntPow exponent, Shift offset
  ExprList kids;
  std::size_t hash = 0;
  std::size_t nodes = 1;  // total tree size including this node
};

/// Immutable expression handle. Copies are O(1) shared references; no method
/// ever mutates a node, so values may be shared across threads freely.
class Expr {
 public:
  Expr();  // Const 0

  static Expr constant(Rational q);
  static Expr integer(long long v);
  static Expr symbol(std::string name);

  // Raw structural builders. No canonicalization happens here; call simplify
  // to reach the canonical form.
  static Expr sum(ExprList terms);
  static Expr product(ExprList factors);
  static Expr pow(Expr base, long long exponent);
  static Expr exp(Expr arg);
  static Expr tanh(Expr arg);
  static Expr sech(Expr arg);
  static Expr cosh(Expr arg);
  static Expr sinh(Expr arg);
  static Expr dx(Expr arg);
  static Expr dxx(Expr arg);
  static Expr shift(Expr arg, long long offset);

  Kind kind() const { return node_->kind; }
  const Rational& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  long long exponent() const { return node_->aux; }
  long long offset() const { return node_->aux; }
  const ExprList& children() const { return node_->kids; }
  const Expr& child(std::size_t i) const { return node_->kids[i]; }
  std::size_t hash() const { return node_->hash; }
  std::size_t nodes() const { return node_->nodes; }

  bool is_const() const { return node_->kind == Kind::Const; }
  bool is_const(long long v) const { return is_const() && node_->value == v; }
  bool is_symbol(const std::string& n) const { return node_->kind == Kind::Symbol && node_->name == n; }

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator-(const Expr& a, const Expr& b) { return sum({a, product({integer(-1), b})}); }
  friend Expr operator-(const Expr& a) { return product({integer(-1), a}); }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) { return product({a, pow(b, -1)}); }

 private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  static Expr make(ExprNode&& n);
  std::shared_ptr<const ExprNode> node_;
};

/// Total order on expressions. Consts sort before symbols before function
/// applications; ties break on payload then children. compare(a,b) == 0 iff
/// the trees are structurally identical.
int compare(const Expr& a, const Expr& b);
bool struct_equal(const Expr& a, const Expr& b);

std::set<std::string> free_symbols(const Expr& e);
bool contains_kind(const Expr& e, Kind k);
bool depends_on(const Expr& e, const std::string& sym);

/// Canonical form: flattened/sorted sums and products, folded constants,
/// merged like terms and like powers. Idempotent; preserves value everywhere
/// both sides are defined.
Expr simplify(const Expr& e);

/// d(e)/d(sym), returned canonical. Operator nodes (dx/dxx/shift) must be
/// resolved away first.
Expr differentiate(const Expr& e, const std::string& sym);

/// Replace every occurrence of the symbol, then canonicalize.
Expr substitute(const Expr& e, const std::string& sym, const Expr& replacement);

/// Turn dx/dxx into derivatives and shift(g, s) into g with space -> space+s.
/// After this the tree contains no operator nodes.
Expr resolve_operators(const Expr& e, const std::string& space);

/// Re-parsable infix form; parse(to_string(e)) == e for canonical e.
std::string to_string(const Expr& e);

}  // namespace taycheck
