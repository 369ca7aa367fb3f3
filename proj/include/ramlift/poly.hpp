#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramlift/errors.hpp"
#include "ramlift/rational.hpp"
#include "ramlift/ring.hpp"

namespace ramlift {

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. The leading coefficient is nonzero unless the polynomial
/// is zero (empty coefficient vector).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static RatPoly constant(const Rational& v) { return RatPoly(std::vector<Rational>{v}); }
  static RatPoly x() { return RatPoly{0, 1}; }
  static RatPoly monomial(const Rational& coeff, std::size_t degree) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = coeff;
    return RatPoly(std::move(c));
  }
  /// Product of (x - root) over the given roots.
  static RatPoly from_roots(const std::vector<Rational>& roots) {
    RatPoly p = constant(1);
    for (const auto& r : roots) p = p * RatPoly(std::vector<Rational>{-r, Rational(1)});
    return p;
  }
  template <class Int>
  static RatPoly from_integers(const std::vector<Int>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.push_back(to_rational(v));
    return RatPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }
  RatPoly operator-() const {
    std::vector<Rational> c = c_;
    for (auto& v : c) v = -v;
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const Rational& s, const RatPoly& p) {
    std::vector<Rational> c = p.c_;
    for (auto& v : c) v *= s;
    return RatPoly(std::move(c));
  }
  RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
  RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  RatPoly derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(d));
  }

  /// p(-x).
  RatPoly reflected() const {
    std::vector<Rational> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return RatPoly(std::move(c));
  }

  RatPoly monic() const {
    if (is_zero()) return *this;
    return Rational(1 / leading()) * *this;
  }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw PreconditionError("polynomial division by zero");
    if (f.degree() < g.degree()) return {RatPoly(), f};
    std::vector<Rational> r = f.c_;
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<Rational> q(r.size() - dg, Rational(0));
    const Rational inv_lead = 1 / g.leading();
    for (std::size_t k = r.size(); k-- > dg;) {
      if (r[k] == 0) continue;
      const Rational t = r[k] * inv_lead;
      q[k - dg] = t;
      for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= t * g.c_[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += (c_[i] > 0) ? " + " : " - ";
      else if (c_[i] < 0) out += "-";
      const Rational a = abs(c_[i]);
      if (a != 1 || i == 0) out += ramlift::to_string(a);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// f / g, requiring a zero remainder.
inline RatPoly div_exact(const RatPoly& f, const RatPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw NotDivisible("div_exact: nonzero remainder " + r.to_string());
  return q;
}

/// Monic greatest common divisor (zero only if both inputs are zero).
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// f / gcd(f, f'), monic.
inline RatPoly square_free_part(const RatPoly& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : RatPoly::constant(1);
  return div_exact(f.monic(), gcd(f, f.derivative()));
}

/// Sturm sequence of a square-free polynomial. Each member is scaled to a
/// primitive integer polynomial by a positive factor, which preserves the
/// sign pattern and keeps evaluation in integer arithmetic.
class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& squarefree) {
    if (squarefree.is_zero()) throw PreconditionError("Sturm sequence of the zero polynomial");
    RatPoly a = squarefree;
    RatPoly b = a.derivative();
    seq_.push_back(to_primitive(a));
    while (!b.is_zero()) {
      seq_.push_back(to_primitive(b));
      RatPoly r = divmod(a, b).second;
      a = std::move(b);
      b = -r;
    }
  }

  /// Sign changes of the sequence at x (zeros skipped).
  int variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq_) {
      const int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  int variations_at_infinity(bool positive) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq_) {
      int s = sgn(p.back());
      if (!positive && (p.size() - 1) % 2 == 1) s = -s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  /// Distinct roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

  int count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

  int sign_of_base(const Rational& x) const { return sign_at(seq_.front(), x); }

 private:
  static std::vector<Integer> to_primitive(const RatPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
      Integer v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      out.push_back(std::move(v));
    }
    if (g > 1)
      for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
  }

  /// Sign of sum a_i p^i q^(d-i) for x = p/q, q > 0.
  static int sign_at(const std::vector<Integer>& a, const Rational& x) {
    const Integer& p = x.get_num();
    const Integer& q = x.get_den();
    Integer acc = a.back();
    Integer qpow = 1;
    for (std::size_t i = a.size() - 1; i-- > 0;) {
      qpow *= q;
      acc = acc * p + a[i] * qpow;
    }
    return sgn(acc);
  }

  std::vector<std::vector<Integer>> seq_;
};

/// Strict bound: every root satisfies |x| < cauchy_bound(f).
inline Rational cauchy_bound(const RatPoly& f) {
  Rational m = 0;
  const Rational& lead = f.leading();
  for (long i = 0; i < f.degree(); ++i) {
    Rational r = abs(f.coeffs()[static_cast<std::size_t>(i)] / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

/// The chain f, gcd(f, f'), gcd of that with its derivative, ...; a root of
/// multiplicity k is a root of exactly the first k members.
inline std::vector<RatPoly> multiplicity_chain(const RatPoly& f) {
  std::vector<RatPoly> chain;
  RatPoly cur = f;
  while (cur.degree() >= 1) {
    chain.push_back(cur);
    cur = gcd(cur, cur.derivative());
  }
  return chain;
}

/// Number of real roots of f counted with multiplicity.
inline long count_real_roots(const RatPoly& f) {
  if (f.is_zero()) throw PreconditionError("root count of the zero polynomial");
  long total = 0;
  for (const auto& d : multiplicity_chain(f)) total += SturmSequence(square_free_part(d)).count_all();
  return total;
}

/// True iff every complex root of f is real.
inline bool is_real_rooted(const RatPoly& f) {
  if (f.is_zero()) throw PreconditionError("is_real_rooted: zero polynomial");
  return count_real_roots(f) == f.degree();
}

struct RootBracket {
  Rational lower;
  Rational upper;
  /// Roots in (lower, upper] with multiplicity; for a degenerate bracket,
  /// the multiplicity of the exact root lower == upper.
  long multiplicity_count = 0;

  bool exact() const { return lower == upper; }
  friend bool operator==(const RootBracket&, const RootBracket&) = default;
};

inline Rational default_tolerance() { return pow2(-40); }

namespace detail {

/// Multiplicity of the unique root of f inside (lo, hi] (or equal to lo
/// when lo == hi).
inline long multiplicity_in(const RatPoly& f, const Rational& lo, const Rational& hi) {
  long mult = 0;
  for (const auto& d : multiplicity_chain(f)) {
    const bool has = (lo == hi) ? d.eval(lo) == 0 : SturmSequence(square_free_part(d)).count(lo, hi) > 0;
    if (!has) break;
    ++mult;
  }
  return mult;
}

}  // namespace detail

/// Bracket of width <= tol containing the largest real root of f, found by
/// Sturm-count bisection from the Cauchy bound. Rational roots are
/// detected and returned as a degenerate bracket.
inline RootBracket largest_root(const RatPoly& f, const Rational& tol = default_tolerance()) {
  if (f.is_zero()) throw PreconditionError("largest_root: zero polynomial");
  if (tol <= 0) throw PreconditionError("largest_root: tolerance must be positive");
  if (f.degree() < 1) throw NoRealRoot("largest_root: constant polynomial has no roots");
  const RatPoly sf = square_free_part(f);
  const SturmSequence s(sf);
  const Rational bound = cauchy_bound(sf);
  Rational lo = -bound;
  Rational hi = bound;
  if (s.count(lo, hi) == 0) throw NoRealRoot("largest_root: no real root");
  for (;;) {
    const int inside = s.count(lo, hi);
    if (inside == 1 && hi - lo <= tol) break;
    Rational mid = (lo + hi) / 2;
    if (s.count(mid, hi) >= 1) {
      lo = mid;
    } else {
      if (sf.eval(mid) == 0) return RootBracket{mid, mid, detail::multiplicity_in(f, mid, mid)};
      hi = mid;
    }
  }
  if (sf.eval(hi) == 0) return RootBracket{hi, hi, detail::multiplicity_in(f, hi, hi)};
  const Rational q = simplest_between(lo, hi);
  if (q != lo && sf.eval(q) == 0) return RootBracket{q, q, detail::multiplicity_in(f, q, q)};
  return RootBracket{lo, hi, detail::multiplicity_in(f, lo, hi)};
}

/// Bracket around the smallest real root (mirror of largest_root).
inline RootBracket smallest_root(const RatPoly& f, const Rational& tol = default_tolerance()) {
  RootBracket b = largest_root(f.reflected(), tol);
  return RootBracket{-b.upper, -b.lower, b.multiplicity_count};
}

/// One distinct real root isolated in (lower, upper], or exactly at
/// lower == upper.
struct IsolatedRoot {
  Rational lower;
  Rational upper;
  bool exact() const { return lower == upper; }
};

/// All distinct real roots of f, ascending, in disjoint isolating intervals.
inline std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& f) {
  if (f.is_zero()) throw PreconditionError("isolate_real_roots: zero polynomial");
  std::vector<IsolatedRoot> out;
  if (f.degree() < 1) return out;
  const RatPoly sf = square_free_part(f);
  const SturmSequence s(sf);
  const Rational bound = cauchy_bound(sf);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int c = s.count(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      if (sf.eval(hi) == 0) {
        out.push_back({hi, hi});
      } else {
        const Rational q = simplest_between(lo, hi);
        if (q != lo && sf.eval(q) == 0) out.push_back({q, q});
        else out.push_back({lo, hi});
      }
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    // push upper half first so the lower half is processed first
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.upper < b.upper; });
  return out;
}

/// Exact comparison of the largest real roots of f and g: -1, 0 or 1.
inline int compare_largest_roots(const RatPoly& f, const RatPoly& g) {
  const RatPoly sf = square_free_part(f);
  const RatPoly sg = square_free_part(g);
  const SturmSequence tf(sf), tg(sg);
  auto isolate_top = [](const RatPoly& p, const SturmSequence& s) {
    const Rational bound = cauchy_bound(p);
    Rational lo = -bound, hi = bound;
    if (s.count(lo, hi) == 0) throw NoRealRoot("compare_largest_roots: no real root");
    while (s.count(lo, hi) > 1) {
      const Rational mid = (lo + hi) / 2;
      if (s.count(mid, hi) >= 1) lo = mid;
      else hi = mid;
    }
    if (p.eval(hi) == 0) lo = hi;
    return std::pair<Rational, Rational>{lo, hi};
  };
  auto [flo, fhi] = isolate_top(sf, tf);
  auto [glo, ghi] = isolate_top(sg, tg);
  const RatPoly h = gcd(sf, sg);
  auto refine = [](const RatPoly& p, const SturmSequence& s, Rational& lo, Rational& hi) {
    if (lo == hi) return;
    const Rational mid = (lo + hi) / 2;
    if (p.eval(mid) == 0 && s.count(mid, hi) == 0) {
      lo = hi = mid;
    } else if (s.count(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (lo != hi && p.eval(hi) == 0) lo = hi;
  };
  for (;;) {
    // A non-exact interval is open at both ends (hi is never a root there);
    // an exact one is the single point lo == hi.
    const bool f_exact = flo == fhi, g_exact = glo == ghi;
    if (f_exact && g_exact) return flo < glo ? -1 : (flo > glo ? 1 : 0);
    if (fhi <= glo) return -1;
    if (ghi <= flo) return 1;
    if (h.degree() >= 1) {
      if (f_exact && h.eval(flo) == 0) return 0;
      if (g_exact && h.eval(glo) == 0) return 0;
      if (!f_exact && !g_exact) {
        const Rational lo = std::max(flo, glo), hi = std::min(fhi, ghi);
        if (lo < hi && SturmSequence(h).count(lo, hi) >= 1) return 0;
      }
    }
    refine(sf, tf, flo, fhi);
    refine(sg, tg, glo, ghi);
  }
}

namespace detail {

/// Distinct real roots of all polynomials jointly, ascending, with the
/// multiplicity of each root in each polynomial: result[k][j] is the
/// multiplicity of the k-th merged root in polys[j].
inline std::vector<std::vector<long>> merged_root_multiplicities(const std::vector<RatPoly>& polys) {
  RatPoly product = RatPoly::constant(1);
  for (const auto& p : polys) product = product * square_free_part(p);
  const std::vector<IsolatedRoot> roots = isolate_real_roots(product);
  std::vector<std::vector<long>> table;
  table.reserve(roots.size());
  for (const auto& r : roots) {
    std::vector<long> row;
    for (const auto& p : polys) row.push_back(multiplicity_in(p, r.lower, r.upper));
    table.push_back(std::move(row));
  }
  return table;
}

/// Expand merged multiplicities into, per polynomial, the ranks of its roots
/// in descending order (rank = index into the merged ascending list).
inline std::vector<std::vector<long>> descending_root_ranks(const std::vector<std::vector<long>>& table,
                                                            std::size_t count) {
  std::vector<std::vector<long>> ranks(count);
  for (std::size_t k = table.size(); k-- > 0;)
    for (std::size_t j = 0; j < count; ++j)
      for (long m = 0; m < table[k][j]; ++m) ranks[j].push_back(static_cast<long>(k));
  return ranks;
}

}  // namespace detail

/// g interlaces f: with roots a_1 >= ... >= a_n of f and b_1 >= ... >= b_{n-1}
/// of g, a_n <= b_{n-1} <= a_{n-1} <= ... <= b_1 <= a_1.
inline bool interlaces(const RatPoly& g, const RatPoly& f) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("interlaces: zero polynomial");
  if (g.degree() != f.degree() - 1)
    throw PreconditionError("interlaces: degree mismatch, need deg g = deg f - 1");
  if (!is_real_rooted(f) || !is_real_rooted(g)) throw PreconditionError("interlaces: inputs must be real-rooted");
  const auto table = detail::merged_root_multiplicities({f, g});
  const auto ranks = detail::descending_root_ranks(table, 2);
  const auto& a = ranks[0];
  const auto& b = ranks[1];
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!(a[i + 1] <= b[i] && b[i] <= a[i])) return false;
  return true;
}

/// The family has a common interlacing: for every i, the (i+1)-th largest
/// root of each member is at most the i-th largest root of every member.
inline bool common_interlacing(const std::vector<RatPoly>& fs) {
  if (fs.empty()) return true;
  const long deg = fs.front().degree();
  const int lead = sgn(fs.front().leading());
  for (const auto& f : fs) {
    if (f.degree() != deg) throw PreconditionError("common_interlacing: degrees differ");
    if (sgn(f.leading()) != lead) throw PreconditionError("common_interlacing: leading signs differ");
    if (!is_real_rooted(f)) throw PreconditionError("common_interlacing: member is not real-rooted");
  }
  const auto table = detail::merged_root_multiplicities(fs);
  const auto ranks = detail::descending_root_ranks(table, fs.size());
  for (std::size_t p = 0; p < fs.size(); ++p)
    for (std::size_t q = 0; q < fs.size(); ++q)
      for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(deg); ++i)
        if (ranks[p][i + 1] > ranks[q][i]) return false;
  return true;
}

}  // namespace ramlift
