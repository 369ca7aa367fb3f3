#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ramlift/cover.hpp"
#include "ramlift/errors.hpp"
#include "ramlift/graph.hpp"
#include "ramlift/poly.hpp"
#include "ramlift/rational.hpp"

namespace ramlift {

/// Rational bracket around the spectral radius of the universal cover.
/// For closed-form and tree values `poly` is a polynomial whose largest
/// root is exactly rho.
struct RhoBracket {
  Rational lower;
  Rational upper;
  std::string method;
  std::optional<RatPoly> poly;
};

inline constexpr unsigned kRhoBits = 40;

namespace detail {

inline RhoBracket sqrt_rho(const Rational& square, RatPoly poly) {
  auto [lo, hi] = sqrt_bracket(square, kRhoBits);
  return {lo, hi, "closed-form", std::move(poly)};
}

/// Whether lambda exceeds the top eigenvalue of the radius-R ball around
/// `root` in the universal cover, by positivity of all LDL pivots taken from
/// the leaves inward. Nodes are classified by (entering oriented edge, depth
/// left), so each class is evaluated once.
inline bool above_ball_spectrum(const OrientedMultigraph& g, int root, int radius, double lambda) {
  const std::size_t slots = 2 * g.edge_count();
  std::vector<std::vector<double>> memo(static_cast<std::size_t>(radius), std::vector<double>(slots, std::nan("")));
  bool positive = true;
  auto slot = [](OrientedEdge e) { return 2 * e.index + (e.forward ? 0 : 1); };
  auto pivot = [&](auto&& self, OrientedEdge e, int depth) -> double {
    double& m = memo[static_cast<std::size_t>(depth)][slot(e)];
    if (!std::isnan(m)) return m;
    double s = lambda;
    if (depth > 0) {
      for (const auto& next : g.outgoing(g.target(e))) {
        if (next == e.reversed()) continue;
        s -= 1.0 / self(self, next, depth - 1);
        if (!positive) break;
      }
    }
    if (!(s > 0)) positive = false;
    m = s;
    return s;
  };
  double s = lambda;
  for (const auto& e : g.outgoing(root)) {
    if (radius == 0) break;
    s -= 1.0 / pivot(pivot, e, radius - 1);
    if (!positive) return false;
  }
  return positive && s > 0;
}

inline double ball_spectral_radius(const OrientedMultigraph& g, int root, int radius, double hi) {
  double lo = 0;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = (lo + hi) / 2;
    if (above_ball_spectrum(g, root, radius, mid)) hi = mid;
    else lo = mid;
  }
  return lo;
}

}  // namespace detail

inline bool is_tree(const OrientedMultigraph& g) {
  return g.connected() && !g.has_loops() && g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count());
}

/// Regular: 2 sqrt(k-1). Biregular (k, l): sqrt(k-1) + sqrt(l-1). Trees
/// are their own universal cover, so rho is the top adjacency eigenvalue.
/// Anything else: ball iteration from below, 2 sqrt(D-1) from above.
inline RhoBracket rho(const OrientedMultigraph& g, double increment = 1e-6, int max_radius = 40) {
  if (!g.connected()) throw PreconditionError("rho: graph is disconnected");
  if (is_tree(g)) {
    const RatPoly p = char_poly(g);
    const RootBracket b = largest_root(p, pow2(-static_cast<long>(kRhoBits)));
    return {b.lower, b.upper, "tree-exact", p};
  }
  const GraphReport rep = classify(g);
  int min_degree = rep.max_degree;
  for (int v = 0; v < g.vertex_count(); ++v) min_degree = std::min(min_degree, g.degree(v));
  if (min_degree >= 2) {
    if (rep.regular_degree) {
      const long k = *rep.regular_degree;
      return detail::sqrt_rho(Rational(4 * (k - 1)), RatPoly{-4 * (k - 1), 0, 1});
    }
    if (rep.biregular_degrees) {
      const long a = rep.biregular_degrees->first - 1, b = rep.biregular_degrees->second - 1;
      // sqrt(a) + sqrt(b) is the largest root of x^4 - 2(a+b)x^2 + (a-b)^2
      RatPoly p{(a - b) * (a - b), 0, -2 * (a + b), 0, 1};
      auto [alo, ahi] = sqrt_bracket(Rational(a), kRhoBits + 1);
      auto [blo, bhi] = sqrt_bracket(Rational(b), kRhoBits + 1);
      return {alo + blo, ahi + bhi, "closed-form", std::move(p)};
    }
  }
  const int delta = rep.max_degree;
  Rational upper = 1;
  if (delta >= 2) upper = sqrt_bracket(Rational(4 * (delta - 1)), kRhoBits).second;
  int root = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  const double hi = to_double(upper) + 1e-9;
  double prev = detail::ball_spectral_radius(g, root, 1, hi);
  for (int radius = 2; radius <= max_radius; ++radius) {
    const double cur = detail::ball_spectral_radius(g, root, radius, hi);
    const bool done = cur - prev < increment;
    prev = std::max(prev, cur);
    if (done) break;
  }
  Rational lower(prev - 1e-12);
  if (lower < 0) lower = 0;
  return {lower, upper, "ball-iteration", std::nullopt};
}

}  // namespace ramlift
