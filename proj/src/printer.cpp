#include <sstream>

#include "taycheck/errors.hpp"
#include "taycheck/expr.hpp"

namespace taycheck {

namespace {

// Precedence from loosest to tightest; used only to decide parenthesization.
enum Prec { kSum = 0, kProd = 1, kUnary = 2, kPow = 3, kAtom = 4 };

void print(std::ostream& os, const Expr& e, int parent_prec);

const char* func_name(Kind k) {
  switch (k) {
    case Kind::Exp: return "exp";
    case Kind::Tanh: return "tanh";
    case Kind::Sech: return "sech";
    case Kind::Cosh: return "cosh";
    case Kind::Sinh: return "sinh";
    case Kind::Dx: return "dx";
    case Kind::Dxx: return "dxx";
    default: return "?";
  }
}

bool is_negative_term(const Expr& t) {
  if (t.is_const()) return t.value() < 0;
  if (t.kind() == Kind::Product && t.child(0).is_const()) return t.child(0).value() < 0;
  return false;
}

// Flips the sign on a term known to be negative.
Expr negate_term(const Expr& t) {
  if (t.is_const()) return Expr::constant(-t.value());
  Rational c = -t.child(0).value();
  ExprList rest(t.children().begin() + 1, t.children().end());
  if (c == 1 && rest.size() == 1) return rest[0];
  ExprList fs;
  if (c != 1) fs.push_back(Expr::constant(c));
  fs.insert(fs.end(), rest.begin(), rest.end());
  if (fs.size() == 1) return fs[0];
  return Expr::product(std::move(fs));
}

void print_product(std::ostream& os, const Expr& e, int parent_prec) {
  // Split into numerator and denominator factors; negative IntPow exponents
  // and the coefficient's denominator go below the bar.
  Rational coeff(1);
  ExprList num, den;  // den holds positive-exponent equivalents
  ExprList factors = e.kind() == Kind::Product ? e.children() : ExprList{e};
  for (const Expr& f : factors) {
    if (f.is_const()) {
      coeff *= f.value();
    } else if (f.kind() == Kind::IntPow && f.exponent() < 0) {
      den.push_back(f.exponent() == -1 ? f.child(0) : Expr::pow(f.child(0), -f.exponent()));
    } else {
      num.push_back(f);
    }
  }
  BigInt cn = numerator(coeff), cd = denominator(coeff);

  bool fraction = !den.empty() || cd != 1;
  int outer = fraction ? kProd : (num.size() > 1 || cn != 1 ? kProd : kAtom);
  bool wrap = parent_prec > outer;
  if (wrap) os << '(';

  std::ostringstream top;
  {
    bool first = true;
    if (cn == -1 && !num.empty()) {
      top << '-';
    } else if (cn != 1 || num.empty()) {
      top << cn.str();
      first = false;
    }
    for (const Expr& f : num) {
      if (!first) top << '*';
      first = false;
      std::ostringstream fs;
      print(fs, f, kProd + 1);
      top << fs.str();
    }
  }
  os << top.str();

  if (fraction) {
    os << '/';
    std::size_t parts = den.size() + (cd != 1 ? 1 : 0);
    std::ostringstream bot;
    {
      bool first = true;
      if (cd != 1) {
        bot << cd.str();
        first = false;
      }
      for (const Expr& f : den) {
        if (!first) bot << '*';
        first = false;
        std::ostringstream fs;
        print(fs, f, kProd + 1);
        bot << fs.str();
      }
    }
    // each factor was printed at kProd+1 so a lone one is already safe after '/'
    if (parts > 1)
      os << '(' << bot.str() << ')';
    else
      os << bot.str();
  }
  if (wrap) os << ')';
}

void print(std::ostream& os, const Expr& e, int parent_prec) {
  switch (e.kind()) {
    case Kind::Const: {
      const Rational& q = e.value();
      BigInt n = numerator(q), d = denominator(q);
      bool neg = n < 0;
      bool frac = d != 1;
      bool wrap = (neg && parent_prec > kSum) || (frac && parent_prec > kProd);
      if (wrap) os << '(';
      os << n.str();
      if (frac) os << '/' << d.str();
      if (wrap) os << ')';
      return;
    }
    case Kind::Symbol:
      os << e.name();
      return;
    case Kind::Exp:
    case Kind::Tanh:
    case Kind::Sech:
    case Kind::Cosh:
    case Kind::Sinh:
    case Kind::Dx:
    case Kind::Dxx:
      os << func_name(e.kind()) << '(';
      print(os, e.child(0), kSum);
      os << ')';
      return;
    case Kind::Shift:
      os << "shift(";
      print(os, e.child(0), kSum);
      os << ',' << e.offset() << ')';
      return;
    case Kind::IntPow: {
      if (e.exponent() < 0) {
        print_product(os, e, parent_prec);  // renders as 1/base^k
        return;
      }
      bool wrap = parent_prec > kPow;
      if (wrap) os << '(';
      print(os, e.child(0), kPow + 1);
      os << '^' << e.exponent();
      if (wrap) os << ')';
      return;
    }
    case Kind::Product:
      print_product(os, e, parent_prec);
      return;
    case Kind::Sum: {
      bool wrap = parent_prec > kSum;
      if (wrap) os << '(';
      bool first = true;
      for (const Expr& t : e.children()) {
        if (is_negative_term(t)) {
          os << (first ? "-" : " - ");
          print(os, negate_term(t), kProd);
        } else {
          if (!first) os << " + ";
          print(os, t, kProd);
        }
        first = false;
      }
      if (wrap) os << ')';
      return;
    }
  }
  throw EngineError("unhandled node kind in printer");
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print(os, e, kSum);
  return os.str();
}

}  // namespace taycheck
