#include "taycheck/parser.hpp"

#include <cctype>
#include <optional>

#include "taycheck/errors.hpp"

namespace taycheck {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int col;  // 1-based
};

struct Lexer {
  const std::string& src;
  int line;
  int col0;
  std::size_t pos = 0;

  Lexer(const std::string& s, int line_, int col0_) : src(s), line(line_), col0(col0_) {}

  [[noreturn]] void fail(int col, const std::string& msg, const std::string& tok = "") const {
    throw SourceError(line, col0 + col, msg, tok);
  }

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    int col = static_cast<int>(pos) + 1;
    if (pos >= src.size()) return {Tok::End, "", col};
    char c = src[pos];
    switch (c) {
      case '+': ++pos; return {Tok::Plus, "+", col};
      case '-': ++pos; return {Tok::Minus, "-", col};
      case '*': ++pos; return {Tok::Star, "*", col};
      case '/': ++pos; return {Tok::Slash, "/", col};
      case '^': ++pos; return {Tok::Caret, "^", col};
      case '(': ++pos; return {Tok::LParen, "(", col};
      case ')': ++pos; return {Tok::RParen, ")", col};
      case ',': ++pos; return {Tok::Comma, ",", col};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string t;
      bool dot = false;
      while (pos < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[pos])) || (!dot && src[pos] == '.'))) {
        dot = dot || src[pos] == '.';
        t += src[pos++];
      }
      if (t == ".") fail(col, "malformed number", t);
      return {Tok::Number, t, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        t += src[pos++];
      return {Tok::Ident, t, col};
    }
    fail(col, "unexpected character", std::string(1, c));
  }
};

struct Parser {
  Lexer lex;
  Token cur;

  Parser(const std::string& s, int line, int col0) : lex(s, line, col0) { cur = lex.next(); }

  [[noreturn]] void fail(const std::string& msg) { lex.fail(cur.col, msg, cur.text); }

  void advance() { cur = lex.next(); }

  bool accept(Tok k) {
    if (cur.kind != k) return false;
    advance();
    return true;
  }

  void expect(Tok k, const char* what) {
    if (cur.kind != k) fail(std::string("expected ") + what);
    advance();
  }

  // binding powers: + - 10, * / 20, unary - 25, ^ 30 (right assoc)
  Expr expression(int min_bp) {
    Expr lhs = prefix();
    for (;;) {
      int bp;
      switch (cur.kind) {
        case Tok::Plus:
        case Tok::Minus: bp = 10; break;
        case Tok::Star:
        case Tok::Slash: bp = 20; break;
        case Tok::Caret: bp = 30; break;
        default: return lhs;
      }
      if (bp < min_bp) return lhs;
      Tok op = cur.kind;
      advance();
      if (op == Tok::Caret) {
        long long e = exponent_literal();
        lhs = Expr::pow(lhs, e);
        continue;
      }
      Expr rhs = expression(bp + 1);
      switch (op) {
        case Tok::Plus: lhs = Expr::sum({lhs, rhs}); break;
        case Tok::Minus: lhs = Expr::sum({lhs, Expr::product({Expr::integer(-1), rhs})}); break;
        case Tok::Star: lhs = Expr::product({lhs, rhs}); break;
        case Tok::Slash: lhs = Expr::product({lhs, Expr::pow(rhs, -1)}); break;
        default: break;
      }
    }
  }

  // Exponents must be integer literals, with an optional sign.
  long long exponent_literal() {
    bool neg = false;
    while (cur.kind == Tok::Minus || cur.kind == Tok::Plus) {
      neg = neg != (cur.kind == Tok::Minus);
      advance();
    }
    if (cur.kind != Tok::Number || cur.text.find('.') != std::string::npos)
      fail("exponent must be an integer literal");
    long long v;
    try {
      v = std::stoll(cur.text);
    } catch (...) {
      fail("exponent out of range");
    }
    advance();
    return neg ? -v : v;
  }

  Expr prefix() {
    switch (cur.kind) {
      case Tok::Minus:
        advance();
        return Expr::product({Expr::integer(-1), expression(25)});
      case Tok::Plus:
        advance();
        return expression(25);
      case Tok::Number: {
        Rational q;
        if (!rational_parse(cur.text, q)) fail("malformed number");
        advance();
        return Expr::constant(q);
      }
      case Tok::LParen: {
        advance();
        Expr e = expression(0);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        std::string name = cur.text;
        int col = cur.col;
        advance();
        if (cur.kind != Tok::LParen) return Expr::symbol(name);
        advance();
        if (name == "shift") {
          Expr arg = expression(0);
          expect(Tok::Comma, "','");
          bool neg = accept(Tok::Minus);
          if (cur.kind != Tok::Number || cur.text.find('.') != std::string::npos)
            fail("shift offset must be an integer literal");
          long long off;
          try {
            off = std::stoll(cur.text);
          } catch (...) {
            fail("shift offset out of range");
          }
          advance();
          expect(Tok::RParen, "')'");
          return Expr::shift(arg, neg ? -off : off);
        }
        Expr arg = expression(0);
        expect(Tok::RParen, "')'");
        if (name == "exp") return Expr::exp(arg);
        if (name == "tanh") return Expr::tanh(arg);
        if (name == "sech") return Expr::sech(arg);
        if (name == "cosh") return Expr::cosh(arg);
        if (name == "sinh") return Expr::sinh(arg);
        if (name == "dx") return Expr::dx(arg);
        if (name == "dxx") return Expr::dxx(arg);
        throw SourceError(lex.line, lex.col0 + col, "unknown function '" + name + "'", name);
      }
      default:
        fail("expected an expression");
    }
  }
};

}  // namespace

Expr parse_expr(const std::string& text, int line, int col0) {
  Parser p(text, line, col0);
  Expr e = p.expression(0);
  if (p.cur.kind != Tok::End) p.fail("trailing input after expression");
  return simplify(e);
}

}  // namespace taycheck
