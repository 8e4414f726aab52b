#pragma once

#include <map>
#include <vector>

#include "taycheck/rational.hpp"

namespace taycheck {

/// Exponent vector over a fixed variable universe. All entries >= 0.
using Mono = std::vector<int>;

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables. Zero coefficients are never stored; the zero
/// polynomial is the empty term map.
class Poly {
 public:
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& q);
  static Poly variable(int nvars, int index, int power = 1);
  static Poly monomial(int nvars, Mono m, const Rational& q);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rational, MonoLess>& terms() const { return terms_; }

  /// Coefficient of the given monomial (zero if absent).
  Rational coeff(const Mono& m) const;

  void add_term(const Mono& m, const Rational& q);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly mul_scalar(const Rational& q) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Highest exponent of variable v appearing in any term.
  int degree(int v) const;

  /// Componentwise minimum exponent vector over all terms; the zero poly
  /// returns all zeros. Used to factor out monomial content.
  Mono min_exponents() const;
  Poly shift_exponents(const Mono& delta) const;  // multiply by x^delta (entries may be negative if divisible)

  /// Positive rational c such that (1/c) * this has coprime integer
  /// coefficients. Sign is not normalized here.
  Rational content() const;

 private:
  int nvars_;
  std::map<Mono, Rational, MonoLess> terms_;
};

/// Exact division; returns false when b does not divide a.
bool poly_divide(const Poly& a, const Poly& b, Poly& quotient);

/// Multivariate gcd via primitive polynomial remainder sequences. Result is
/// primitive with positive leading coefficient in lexicographic term order;
/// gcd(0, b) is normalized b. Both inputs must share a variable universe.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace taycheck
