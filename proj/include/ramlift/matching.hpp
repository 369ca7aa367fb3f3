#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ramlift/cover.hpp"
#include "ramlift/errors.hpp"
#include "ramlift/graph.hpp"
#include "ramlift/perm.hpp"
#include "ramlift/poly.hpp"

namespace ramlift {

/// Number of i-edge matchings for i = 0, 1, ... (loops never match).
inline std::vector<Integer> matching_counts(const OrientedMultigraph& g) {
  std::vector<Integer> counts(static_cast<std::size_t>(g.vertex_count()) / 2 + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  auto rec = [&](auto&& self, std::size_t j, std::size_t size) -> void {
    if (j == g.edge_count()) {
      ++counts[size];
      return;
    }
    self(self, j + 1, size);
    const Edge& e = g.edge(j);
    if (e.is_loop()) return;
    const auto h = static_cast<std::size_t>(e.head), t = static_cast<std::size_t>(e.tail);
    if (used[h] || used[t]) return;
    used[h] = used[t] = true;
    self(self, j + 1, size + 1);
    used[h] = used[t] = false;
  };
  rec(rec, 0, 0);
  return counts;
}

/// sum_i (-1)^i m_i x^(n - 2i).
inline RatPoly matching_poly(const OrientedMultigraph& g) {
  const auto counts = matching_counts(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Rational> c(n + 1, 0);
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (2 * i <= n) c[n - 2 * i] = (i % 2 ? -1 : 1) * Rational(counts[i]);
  return RatPoly(std::move(c));
}

/// Edge multiplicities of a d-multi-matching, indexed like the edges.
using MultiMatching = std::vector<int>;

/// m(v): multiplicities of the edges at v, loops counted twice.
inline std::vector<int> vertex_load(const OrientedMultigraph& g, const MultiMatching& m) {
  std::vector<int> load(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    load[static_cast<std::size_t>(g.edge(j).head)] += m[j];
    load[static_cast<std::size_t>(g.edge(j).tail)] += m[j];
  }
  return load;
}

/// Calls `visit` once for every d-multi-matching, the zero one included.
inline void enumerate_multimatchings(const OrientedMultigraph& g, int d,
                                     const std::function<void(const MultiMatching&)>& visit) {
  if (d < 1) throw PreconditionError("multi-matchings: d must be at least 1");
  MultiMatching m(g.edge_count(), 0);
  std::vector<int> load(static_cast<std::size_t>(g.vertex_count()), 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == g.edge_count()) {
      visit(m);
      return;
    }
    const auto h = static_cast<std::size_t>(g.edge(j).head), t = static_cast<std::size_t>(g.edge(j).tail);
    for (int k = 0;; ++k) {
      m[j] = k;
      load[h] += k;
      load[t] += k;
      const bool ok = load[h] <= d && load[t] <= d;
      if (ok) self(self, j + 1);
      load[h] -= k;
      load[t] -= k;
      if (!ok) break;
    }
    m[j] = 0;
  };
  rec(rec, 0);
}

inline Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline Integer binomial(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

/// W_d(m) = prod_v multinomial(d; m at v, d - m(v)) / prod_e binom(d, m(e)),
/// a loop entering its vertex's multinomial twice.
inline Rational multimatching_weight(const OrientedMultigraph& g, const MultiMatching& m, int d) {
  if (m.size() != g.edge_count()) throw PreconditionError("weight: multiplicity vector has the wrong length");
  const auto load = vertex_load(g, m);
  Integer num = 1, den = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int lv = load[static_cast<std::size_t>(v)];
    if (lv > d) throw PreconditionError("weight: vertex load exceeds d");
    num *= factorial(d);
    den *= factorial(d - lv);
  }
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    den *= factorial(m[j]) * factorial(m[j]);
    num *= factorial(m[j]) * factorial(d - m[j]);
    den *= factorial(d);
  }
  Rational w(num, den);
  w.canonicalize();
  return w;
}

/// sum over d-multi-matchings of (-1)^|m| W_d(m) x^(nd - 2|m|).
inline RatPoly d_matching_poly(const OrientedMultigraph& g, int d) {
  const std::size_t top = static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(d);
  std::vector<Rational> c(top + 1, 0);
  enumerate_multimatchings(g, d, [&](const MultiMatching& m) {
    std::size_t size = 0;
    for (int k : m) size += static_cast<std::size_t>(k);
    const Rational w = multimatching_weight(g, m, d);
    c[top - 2 * size] += size % 2 ? Rational(-w) : w;
  });
  return RatPoly(std::move(c));
}

inline constexpr double kDefaultEnumerationCap = 1e6;

/// Calls `visit` on every labeling sigma in S_d^E(G), in mixed-radix order
/// with edge 0 varying fastest.
inline void for_each_sr_labeling(std::size_t edges, int d, double cap,
                                 const std::function<void(const std::vector<Permutation>&)>& visit) {
  const auto perms = all_permutations(d);
  double count = 1;
  for (std::size_t j = 0; j < edges; ++j) count *= static_cast<double>(perms.size());
  if (count > cap)
    throw CapExceeded("labeling enumeration: " + std::to_string(static_cast<long long>(count)) +
                      " labelings exceed the cap; use a smaller graph or r");
  std::vector<std::size_t> digit(edges, 0);
  std::vector<Permutation> sigma(edges, perms[0]);
  for (;;) {
    visit(sigma);
    std::size_t j = 0;
    while (j < edges && ++digit[j] == perms.size()) {
      digit[j] = 0;
      sigma[j] = perms[0];
      ++j;
    }
    if (j == edges) break;
    sigma[j] = perms[digit[j]];
  }
}

/// Exact average of the matching polynomials of all d-coverings.
inline RatPoly d_matching_poly_oracle(const OrientedMultigraph& g, int d, double cap = kDefaultEnumerationCap) {
  if (d < 1) throw PreconditionError("d-matching oracle: d must be at least 1");
  if (g.edge_count() == 0) {
    std::vector<Rational> c(static_cast<std::size_t>(g.vertex_count() * d) + 1, 0);
    c.back() = 1;
    return RatPoly(std::move(c));
  }
  RatPoly sum;
  Integer count = 0;
  for_each_sr_labeling(g.edge_count(), d, cap, [&](const std::vector<Permutation>& sigma) {
    sum += matching_poly(build_covering(g, sigma));
    ++count;
  });
  const Rational inv = 1 / Rational(count);
  return inv * sum;
}

}  // namespace ramlift
