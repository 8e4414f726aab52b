#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

namespace taycheck {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// gcd extended to rationals: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d) on reduced
/// inputs. Result is >= 0 and divides both arguments to an integer ratio.
Rational rational_gcd(const Rational& a, const Rational& b);

/// q^e with exact arithmetic. Throws DegenerateExpression for 0^negative.
Rational rational_pow(const Rational& q, long long e);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& q);

/// Parse "p", "p/q", or a decimal literal like "0.25" into an exact rational.
/// Returns false on malformed input.
bool rational_parse(const std::string& text, Rational& out);

/// splitmix64: tiny, stable PRNG used wherever reproducible pseudo-random
/// draws must not depend on platform libstdc++ details.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace taycheck
