#pragma once

// Slow, direct reference computations used only by the tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "ramlift/graph.hpp"
#include "ramlift/matrix.hpp"
#include "ramlift/poly.hpp"
#include "ramlift/rational.hpp"

namespace oracle {

using ramlift::Integer;
using ramlift::Matrix;
using ramlift::RatPoly;
using ramlift::Rational;

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// Sum over all permutations.
template <class T>
T leibniz(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total(0);
  do {
    T term(perm_sign(p));
    for (std::size_t i = 0; i < n; ++i) term = term * a(i, static_cast<std::size_t>(p[i]));
    total = total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// det(xI - A) by Leibniz at x = 0..n and Lagrange interpolation.
inline RatPoly interpolated_charpoly(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  RatPoly out;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Rational(static_cast<long>(k)) : Rational(0)) - a(i, j);
    const Rational y = leibniz(m);
    RatPoly basis = RatPoly::constant(y);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      const Rational denom(static_cast<long>(k) - static_cast<long>(j));
      basis = basis * RatPoly(std::vector<Rational>{Rational(-static_cast<long>(j)) / denom, Rational(1) / denom});
    }
    out += basis;
  }
  return out;
}

/// Number of k-edge matchings, by checking every edge subset. Loops never match.
inline std::vector<long> matching_counts(const ramlift::OrientedMultigraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<long> counts(static_cast<std::size_t>(g.vertex_count()) / 2 + 1, 0);
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> used(static_cast<std::size_t>(g.vertex_count()), 0);
    bool ok = true;
    int k = 0;
    for (std::size_t j = 0; j < m && ok; ++j) {
      if (!(mask >> j & 1)) continue;
      const auto& e = g.edge(j);
      if (e.head == e.tail) ok = false;
      ok = ok && !used[static_cast<std::size_t>(e.head)]++ && !used[static_cast<std::size_t>(e.tail)]++;
      ++k;
    }
    if (ok) ++counts[static_cast<std::size_t>(k)];
  }
  return counts;
}

}  // namespace oracle
