#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "ramlift/rational.hpp"

namespace ramlift {

/// Thrown by SafeInt when a 64-bit operation would wrap. Callers that
/// can recompute with GMP integers catch this and retry.
class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("64-bit integer overflow") {}
};

/// Overflow-checked 64-bit integer.
class SafeInt {
 public:
  constexpr SafeInt() = default;
  constexpr SafeInt(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr long long value() const { return v_; }

  friend SafeInt operator+(SafeInt a, SafeInt b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend SafeInt operator-(SafeInt a, SafeInt b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend SafeInt operator*(SafeInt a, SafeInt b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  SafeInt operator-() const { return SafeInt(0) - *this; }
  SafeInt& operator+=(SafeInt o) { return *this = *this + o; }
  SafeInt& operator-=(SafeInt o) { return *this = *this - o; }
  SafeInt& operator*=(SafeInt o) { return *this = *this * o; }

  friend bool operator==(SafeInt a, SafeInt b) { return a.v_ == b.v_; }
  friend auto operator<=>(SafeInt a, SafeInt b) { return a.v_ <=> b.v_; }

 private:
  long long v_ = 0;
};

inline Integer to_integer(SafeInt v) { return Integer(static_cast<signed long>(v.value())); }
inline Integer to_integer(const Integer& v) { return v; }
inline Rational to_rational(SafeInt v) { return Rational(to_integer(v)); }
inline Rational to_rational(const Integer& v) { return Rational(v); }
inline Rational to_rational(const Rational& v) { return v; }

inline bool is_zero(SafeInt v) { return v.value() == 0; }
inline bool is_zero(const Integer& v) { return v == 0; }
inline bool is_zero(const Rational& v) { return v == 0; }

/// Element of the 12th cyclotomic field Q(z), z = exp(2 pi i / 12), stored
/// in the power basis 1, z, z^2, z^3 modulo z^4 - z^2 + 1. Every m-th root
/// of unity with m in {1, 2, 3, 4, 6} is a power of z, so this one type
/// carries all exact-mode group matrices.
template <class T>
class Cyclo {
 public:
  static constexpr int kOrder = 12;

  Cyclo() : c_{T(0), T(0), T(0), T(0)} {}
  Cyclo(long v) : c_{T(v), T(0), T(0), T(0)} {}  // NOLINT(google-explicit-constructor)
  Cyclo(T a0, T a1, T a2, T a3) : c_{a0, a1, a2, a3} {}

  /// z^k for any integer k.
  static Cyclo zeta_power(long long k) {
    k %= kOrder;
    if (k < 0) k += kOrder;
    // z^0..z^11 reduced; z^6 = -1.
    static const std::array<std::array<int, 4>, 12> table = [] {
      std::array<std::array<int, 4>, 12> t{};
      std::array<int, 4> cur{1, 0, 0, 0};
      for (int i = 0; i < 12; ++i) {
        t[i] = cur;
        // multiply by z: shift, then fold z^4 = z^2 - 1
        const int top = cur[3];
        cur = {0, cur[0], cur[1], cur[2]};
        cur[2] += top;
        cur[0] -= top;
      }
      return t;
    }();
    const auto& e = table[static_cast<std::size_t>(k)];
    return Cyclo(T(e[0]), T(e[1]), T(e[2]), T(e[3]));
  }

  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    return Cyclo(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    return Cyclo(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
  }
  Cyclo operator-() const { return Cyclo(-c_[0], -c_[1], -c_[2], -c_[3]); }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.is_rational()) return b.scaled(a.c_[0]);
    if (b.is_rational()) return a.scaled(b.c_[0]);
    std::array<T, 7> p{T(0), T(0), T(0), T(0), T(0), T(0), T(0)};
    for (int i = 0; i < 4; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (int j = 0; j < 4; ++j) {
        if (is_zero(b.c_[j])) continue;
        p[i + j] = p[i + j] + a.c_[i] * b.c_[j];
      }
    }
    for (int k = 6; k >= 4; --k) {
      p[k - 2] = p[k - 2] + p[k];
      p[k - 4] = p[k - 4] - p[k];
    }
    return Cyclo(p[0], p[1], p[2], p[3]);
  }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo scaled(const T& s) const { return Cyclo(c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s); }

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }

  bool is_rational() const { return is_zero(c_[1]) && is_zero(c_[2]) && is_zero(c_[3]); }
  bool is_zero_element() const { return is_rational() && is_zero(c_[0]); }

  /// The field automorphism z -> z^k (k a unit mod 12).
  Cyclo galois(int k) const {
    Cyclo r;
    for (int i = 0; i < 4; ++i) {
      if (is_zero(c_[i])) continue;
      r += zeta_power(static_cast<long long>(i) * k).scaled(c_[i]);
    }
    return r;
  }

  /// Complex conjugation, z -> z^-1.
  Cyclo conj() const { return galois(11); }

  std::complex<double> to_complex() const {
    std::complex<double> acc = 0;
    for (int i = 0; i < 4; ++i) {
      const double angle = 2.0 * std::numbers::pi * i / kOrder;
      acc += to_rational(c_[i]).get_d() * std::polar(1.0, angle);
    }
    return acc;
  }

  template <class U>
  Cyclo<U> convert() const {
    return Cyclo<U>(U(to_integer(c_[0])), U(to_integer(c_[1])), U(to_integer(c_[2])),
                    U(to_integer(c_[3])));
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (const auto& x : c_) {
      h = h * 1000003u ^ std::hash<long long>()(static_cast<long long>(to_integer(x).get_si()));
    }
    return h;
  }

 private:
  std::array<T, 4> c_;
};

template <class T>
inline bool is_zero(const Cyclo<T>& v) {
  return v.is_zero_element();
}

/// Multiplicative inverse in Q(z): the product of the three non-trivial
/// Galois conjugates divided by the (rational) norm.
inline Cyclo<Rational> inverse(const Cyclo<Rational>& a) {
  if (a.is_zero_element()) throw PreconditionError("cyclotomic inverse of zero");
  const Cyclo<Rational> co = a.galois(5) * a.galois(7) * a.galois(11);
  const Cyclo<Rational> n = a * co;
  if (!n.is_rational()) throw NumericalDegeneracy("cyclotomic norm is not rational");
  return co.scaled(1 / n[0]);
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Cyclo<T>& v) {
  os << '(' << to_rational(v[0]).get_str();
  for (int i = 1; i < 4; ++i) os << ',' << to_rational(v[static_cast<std::size_t>(i)]).get_str();
  return os << ')';
}

using CycloInt = Cyclo<SafeInt>;
using CycloBig = Cyclo<Integer>;
using CycloRat = Cyclo<Rational>;

}  // namespace ramlift
