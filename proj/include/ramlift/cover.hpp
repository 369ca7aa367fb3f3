#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ramlift/errors.hpp"
#include "ramlift/graph.hpp"
#include "ramlift/group.hpp"
#include "ramlift/matrix.hpp"
#include "ramlift/perm.hpp"
#include "ramlift/poly.hpp"
#include "ramlift/ring.hpp"

namespace ramlift {

/// Group element id per edge of E+; the reverse orientation carries the
/// inverse implicitly.
using GroupLabeling = std::vector<int>;

/// The r-covering: vertex (v, i) is v*r + i and edge e joins h(e)_i to
/// t(e)_{sigma_e(i)}. Covering edge e*r + i lies over base edge e.
inline OrientedMultigraph build_covering(const OrientedMultigraph& g, const std::vector<Permutation>& sigma) {
  if (sigma.size() != g.edge_count()) throw PreconditionError("covering: one permutation per edge required");
  if (sigma.empty()) throw PreconditionError("covering: graph has no edges, r is undetermined");
  const int r = sigma.front().size();
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (sigma[j].size() != r) throw PreconditionError("covering: permutations of different sizes");
    for (int i = 0; i < r; ++i) edges.push_back({g.edge(j).head * r + i, g.edge(j).tail * r + sigma[j](i)});
  }
  return OrientedMultigraph(g.vertex_count() * r, std::move(edges));
}

/// Adjacency matrix with loops counted twice on the diagonal.
inline Matrix<SafeInt> adjacency(const OrientedMultigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix<SafeInt> a(n, n);
  for (const auto& e : g.edges()) {
    a(static_cast<std::size_t>(e.head), static_cast<std::size_t>(e.tail)) += 1;
    a(static_cast<std::size_t>(e.tail), static_cast<std::size_t>(e.head)) += 1;
  }
  return a;
}

/// Block (h, t) gets B_e and block (t, h) gets B_e^-1 for every edge, so a
/// loop adds both to its diagonal block.
inline CycloMatrix twisted_adjacency(const OrientedMultigraph& g, const std::vector<CycloMatrix>& forward,
                                     const std::vector<CycloMatrix>& backward) {
  if (forward.size() != g.edge_count() || backward.size() != g.edge_count())
    throw PreconditionError("twisted adjacency: one matrix per edge required");
  const std::size_t d = forward.empty() ? 1 : forward.front().rows();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  CycloMatrix a(n * d, n * d);
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (forward[j].rows() != d || backward[j].rows() != d)
      throw PreconditionError("twisted adjacency: matrices of different dimensions");
    const auto h = static_cast<std::size_t>(g.edge(j).head), t = static_cast<std::size_t>(g.edge(j).tail);
    a.add_block(h * d, t * d, forward[j]);
    a.add_block(t * d, h * d, backward[j]);
  }
  return a;
}

inline CycloMatrix twisted_adjacency(const OrientedMultigraph& g, const GroupLabeling& gamma, const Representation& pi) {
  if (gamma.size() != g.edge_count()) throw PreconditionError("twisted adjacency: labeling size differs from edge count");
  std::vector<CycloMatrix> fwd, bwd;
  for (int x : gamma) {
    if (x < 0 || static_cast<std::size_t>(x) >= pi.group->size())
      throw PreconditionError("twisted adjacency: label outside the group");
    fwd.push_back(pi(x));
    bwd.push_back(pi(pi.group->inverse(x)));
  }
  if (g.edge_count() == 0) {
    const auto n = static_cast<std::size_t>(g.vertex_count()) * pi.dim;
    return CycloMatrix(n, n);
  }
  return twisted_adjacency(g, fwd, bwd);
}

namespace detail {

template <class T>
RatPoly rational_part(const std::vector<Cyclo<T>>& cp) {
  std::vector<Rational> out;
  out.reserve(cp.size());
  for (const auto& c : cp) {
    if (!c.is_rational()) throw ImaginaryResidue("characteristic polynomial has a non-rational coefficient");
    out.push_back(to_rational(c[0]));
  }
  return RatPoly(std::move(out));
}

inline bool all_rational(const CycloMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const CycloInt& x) { return x.is_rational(); });
}

}  // namespace detail

inline RatPoly char_poly(const Matrix<SafeInt>& a) {
  try {
    return RatPoly::from_integers(berkowitz_charpoly(a));
  } catch (const ArithmeticOverflow&) {
    return RatPoly::from_integers(berkowitz_charpoly(a.map<Integer>([](SafeInt v) { return to_integer(v); })));
  }
}

/// Exact det(xI - A) over Z[z12]. The coefficients must reduce to rationals
/// (true for Hermitian input); otherwise ImaginaryResidue.
inline RatPoly char_poly(const CycloMatrix& a) {
  if (detail::all_rational(a)) return char_poly(a.map<SafeInt>([](const CycloInt& v) { return v[0]; }));
  try {
    return detail::rational_part(berkowitz_charpoly(a));
  } catch (const ArithmeticOverflow&) {
    return detail::rational_part(
        berkowitz_charpoly(a.map<CycloBig>([](const CycloInt& v) { return v.convert<Integer>(); })));
  }
}

inline RatPoly char_poly(const OrientedMultigraph& g) { return char_poly(adjacency(g)); }

/// Twisted adjacency of an S_r labeling under std, on the integer basis.
inline Matrix<SafeInt> std_twisted_adjacency(const OrientedMultigraph& g, const std::vector<Permutation>& sigma) {
  if (sigma.size() != g.edge_count()) throw PreconditionError("std adjacency: one permutation per edge required");
  std::vector<CycloMatrix> fwd, bwd;
  for (const auto& p : sigma) {
    fwd.push_back(std_matrix(p));
    bwd.push_back(std_matrix(p.inverse()));
  }
  const CycloMatrix a = twisted_adjacency(g, fwd, bwd);
  return a.map<SafeInt>([](const CycloInt& v) { return v[0]; });
}

/// The new-spectrum polynomial of the covering given by sigma, computed
/// both as phi(H) / phi(G) and as det(xI - A_{sigma,std}); the two must agree.
inline RatPoly new_char_poly(const OrientedMultigraph& g, const std::vector<Permutation>& sigma) {
  if (!sigma.empty() && sigma.front().size() == 1) return RatPoly::constant(1);
  const RatPoly direct = char_poly(std_twisted_adjacency(g, sigma));
  const RatPoly divided = div_exact(char_poly(build_covering(g, sigma)), char_poly(g));
  if (!(direct == divided)) throw VerificationMismatch("new spectrum: quotient and std route disagree");
  return direct;
}

/// Eigenvalues (ascending) of the Hermitian twisted adjacency of a Z/m
/// labeling under k -> exp(2 pi i k / m), for any m.
inline std::vector<double> cyclic_spectrum_numeric(const OrientedMultigraph& g, const std::vector<int>& labels, int m) {
  if (m < 1) throw PreconditionError("cyclic spectrum: m must be positive");
  if (labels.size() != g.edge_count()) throw PreconditionError("cyclic spectrum: labeling size differs from edge count");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * labels[j] / m);
    a(g.edge(j).head, g.edge(j).tail) += z;
    a(g.edge(j).tail, g.edge(j).head) += std::conj(z);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return out;
}

}  // namespace ramlift
