#include "taycheck/rational.hpp"

#include "taycheck/errors.hpp"

#include <cctype>

namespace taycheck {

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  BigInt an = numerator(a), ad = denominator(a);
  BigInt bn = numerator(b), bd = denominator(b);
  BigInt g = gcd(abs(an), abs(bn));
  BigInt l = ad / gcd(ad, bd) * bd;
  return Rational(g, l);
}

Rational rational_pow(const Rational& q, long long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw DegenerateExpression("zero raised to a negative power");
  bool inv = e < 0;
  unsigned long long n = inv ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Rational base = q, acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (inv) acc = Rational(1) / acc;
  return acc;
}

std::string rational_str(const Rational& q) {
  Rational r = q;
  return r.str();
}

bool rational_parse(const std::string& text, Rational& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) return false;
  std::string intpart, fracpart, denpart;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) intpart += text[i++];
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) fracpart += text[i++];
    if (intpart.empty() && fracpart.empty()) return false;
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) denpart += text[i++];
    if (intpart.empty() || denpart.empty()) return false;
  }
  if (i != text.size() || (intpart.empty() && fracpart.empty())) return false;
  BigInt num = intpart.empty() ? BigInt(0) : BigInt(intpart);
  BigInt den(1);
  for (char c : fracpart) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (!denpart.empty()) {
    den = BigInt(denpart);
    if (den == 0) return false;
  }
  out = Rational(num, den);
  if (neg) out = -out;
  return true;
}

}  // namespace taycheck
