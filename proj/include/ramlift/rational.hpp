#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "ramlift/errors.hpp"

namespace ramlift {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms.
inline Rational frac(long n, long d) {
  if (d == 0) throw PreconditionError("rational: zero denominator");
  Rational q{Integer(n), Integer(d)};
  q.canonicalize();
  return q;
}

/// Parses "p/q", "-p/q" or a plain integer. The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ')) s.pop_back();
  if (s.empty()) throw ParseError("rational: empty string");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw ParseError("rational: unexpected character in '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw ParseError("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline int sign(const Rational& q) { return sgn(q); }

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// 2^exponent for any integer exponent.
inline Rational pow2(long exponent) {
  Integer p = 1;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  if (exponent >= 0) return Rational(p);
  Rational q(Integer(1), p);
  q.canonicalize();
  return q;
}

/// The rational with the smallest denominator (then smallest magnitude)
/// in the closed interval [lo, hi].
inline Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  const Integer c = ceil_of(lo);
  if (Rational(c) <= hi) return Rational(c);
  const Integer f = floor_of(lo);
  const Rational a = lo - f;
  const Rational b = hi - f;
  Rational inner = simplest_between(1 / b, 1 / a);
  Rational result = Rational(f) + 1 / inner;
  result.canonicalize();
  return result;
}

/// Rational bracket [lower, upper] around sqrt(x) with upper - lower <= 2^-bits.
/// Degenerate when x is the square of a rational.
inline std::pair<Rational, Rational> sqrt_bracket(const Rational& x, unsigned bits) {
  if (x < 0) throw PreconditionError("sqrt_bracket: negative argument");
  if (mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t())) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return {r, r};
  }
  Rational scaled = x * pow2(2 * static_cast<long>(bits));
  const Integer fl = floor_of(scaled);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
  const Rational step = pow2(-static_cast<long>(bits));
  Rational lower = Rational(s) * step;
  Rational upper = Rational(s + 1) * step;
  lower.canonicalize();
  upper.canonicalize();
  return {lower, upper};
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace ramlift
