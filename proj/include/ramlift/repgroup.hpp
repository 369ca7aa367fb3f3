#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "ramlift/errors.hpp"
#include "ramlift/group.hpp"
#include "ramlift/matrix.hpp"
#include "ramlift/ring.hpp"

namespace ramlift {

/// All m-subsets of 0..d-1 in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (m - cur.size()) <= d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// m-th exterior power on the lexicographic m-subset basis; the (I, J)
/// entry of the image of g is the minor of pi(g) on rows I, columns J.
inline Representation exterior_power(const Representation& pi, std::size_t m) {
  if (m > pi.dim) throw PreconditionError("exterior power: m exceeds the dimension");
  const auto basis = subsets(pi.dim, m);
  Representation out{pi.group, basis.size(), {}, "wedge^" + std::to_string(m) + "(" + pi.name + ")"};
  for (const auto& a : pi.matrices) {
    CycloMatrix w(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) w(i, j) = minor_det(a, basis[i], basis[j]);
    out.matrices.push_back(std::move(w));
  }
  return out;
}

using Character = std::vector<CycloInt>;

inline Character character(const Representation& pi) {
  Character chi;
  chi.reserve(pi.matrices.size());
  for (const auto& m : pi.matrices) chi.push_back(trace(m));
  return chi;
}

/// (1/|G|) sum_g chi1(g) conj(chi2(g)); throws NumericalDegeneracy unless it
/// is a rational integer, as it must be for characters.
inline long character_inner_product(const Character& a, const Character& b) {
  if (a.size() != b.size() || a.empty()) throw PreconditionError("character inner product: length mismatch");
  CycloBig acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].convert<Integer>() * b[i].conj().convert<Integer>();
  if (!acc.is_rational()) throw NumericalDegeneracy("character inner product is not rational");
  const Integer n(static_cast<unsigned long>(a.size()));
  if (acc[0] % n != 0) throw NumericalDegeneracy("character inner product is not an integer");
  return Integer(acc[0] / n).get_si();
}

struct P1Report {
  bool pass = false;
  /// <chi_m, chi_m> for m = 0..dim.
  std::vector<long> norms;
  /// Pairs (i, j), i < j, whose exterior powers are isomorphic.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
};

/// Every exterior power irreducible and no two isomorphic.
inline P1Report check_p1(const Representation& pi) {
  std::vector<Character> chis;
  for (std::size_t m = 0; m <= pi.dim; ++m) chis.push_back(character(exterior_power(pi, m)));
  P1Report rep;
  rep.pass = true;
  for (std::size_t i = 0; i < chis.size(); ++i) {
    rep.norms.push_back(character_inner_product(chis[i], chis[i]));
    if (rep.norms.back() != 1) rep.pass = false;
    for (std::size_t j = 0; j < i; ++j)
      if (character_inner_product(chis[j], chis[i]) != 0) {
        rep.collisions.emplace_back(j, i);
        rep.pass = false;
      }
  }
  return rep;
}

inline bool is_pseudo_reflection(const CycloMatrix& m) {
  if (!m.square()) throw PreconditionError("pseudo-reflection test on a non-square matrix");
  return has_rank_one(m - CycloMatrix::identity(m.rows()));
}

struct P2Report {
  bool pass = false;
  std::size_t image_order = 0;
  std::size_t reflection_count = 0;
  std::size_t generated_order = 0;
};

/// Whether pi(G) is generated by its pseudo-reflections.
inline P2Report check_p2(const Representation& pi) {
  std::unordered_set<CycloMatrix, CycloMatrixHash> image(pi.matrices.begin(), pi.matrices.end());
  std::vector<CycloMatrix> reflections;
  for (const auto& m : image)
    if (is_pseudo_reflection(m)) reflections.push_back(m);
  std::vector<CycloMatrix> gen{CycloMatrix::identity(pi.dim)};
  std::unordered_set<CycloMatrix, CycloMatrixHash> seen(gen.begin(), gen.end());
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (const auto& s : reflections) {
      CycloMatrix p = gen[i] * s;
      if (seen.insert(p).second) gen.push_back(std::move(p));
    }
  P2Report rep;
  rep.image_order = image.size();
  rep.reflection_count = reflections.size();
  rep.generated_order = gen.size();
  rep.pass = gen.size() == image.size();
  return rep;
}

/// One summand of the minor expansion of det(A_1 + ... + A_q).
template <class T>
struct DetOfSumTerm {
  std::vector<int> row_part;
  std::vector<int> col_part;
  int sign = 1;
  T value;
};

template <class T>
struct DetOfSumResult {
  T value;
  std::vector<DetOfSumTerm<T>> terms;
};

/// det(sum_l A_l) expanded as the signed sum over ordered partitions
/// (R_1..R_q), (C_1..C_q) with |R_l| = |C_l| of prod_l det(A_l[R_l, C_l]).
/// The sign is that of the permutation sending the k-th element of each R_l
/// to the k-th element of C_l. Zero terms are dropped from the trace.
template <class T>
DetOfSumResult<T> det_of_sum(const std::vector<Matrix<T>>& mats) {
  if (mats.empty()) throw PreconditionError("det_of_sum: need at least one matrix");
  const std::size_t d = mats[0].rows();
  const std::size_t q = mats.size();
  for (const auto& a : mats)
    if (a.rows() != d || a.cols() != d) throw PreconditionError("det_of_sum: matrices must be square of equal size");
  DetOfSumResult<T> out{T(0), {}};
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= q;
  auto decode = [&](std::size_t code) {
    std::vector<int> part(d);
    for (std::size_t i = 0; i < d; ++i, code /= q) part[i] = static_cast<int>(code % q);
    return part;
  };
  for (std::size_t rc = 0; rc < total; ++rc) {
    const auto rows = decode(rc);
    for (std::size_t cc = 0; cc < total; ++cc) {
      const auto cols = decode(cc);
      bool sizes_match = true;
      for (std::size_t l = 0; l < q && sizes_match; ++l)
        sizes_match = std::count(rows.begin(), rows.end(), static_cast<int>(l)) ==
                      std::count(cols.begin(), cols.end(), static_cast<int>(l));
      if (!sizes_match) continue;
      std::vector<int> image(d);
      T prod(1);
      for (std::size_t l = 0; l < q; ++l) {
        std::vector<std::size_t> r, c;
        for (std::size_t i = 0; i < d; ++i) {
          if (rows[i] == static_cast<int>(l)) r.push_back(i);
          if (cols[i] == static_cast<int>(l)) c.push_back(i);
        }
        for (std::size_t k = 0; k < r.size(); ++k) image[r[k]] = static_cast<int>(c[k]);
        if (!r.empty()) prod = prod * minor_det(mats[l], r, c);
      }
      if (is_zero(prod)) continue;
      const int sgn = Permutation(image).sign();
      out.value = sgn > 0 ? T(out.value + prod) : T(out.value - prod);
      out.terms.push_back({rows, cols, sgn, prod});
    }
  }
  return out;
}

using ComplexMatrix = Eigen::MatrixXcd;

inline ComplexMatrix to_complex_matrix(const CycloMatrix& m) {
  ComplexMatrix c(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  return c;
}

/// Unitary matrices B pi(g) B^-1, with B the positive square root of the
/// group average of pi(g)^* pi(g).
inline std::vector<ComplexMatrix> unitarize(const Representation& pi) {
  std::vector<ComplexMatrix> mats;
  for (const auto& m : pi.matrices) mats.push_back(to_complex_matrix(m));
  const auto d = static_cast<Eigen::Index>(pi.dim);
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (const auto& m : mats) h += m.adjoint() * m;
  h /= static_cast<double>(mats.size());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const ComplexMatrix b = es.operatorSqrt();
  const ComplexMatrix binv = es.operatorInverseSqrt();
  for (auto& m : mats) m = b * m * binv;
  return mats;
}

struct PeterWeylReport {
  bool pass = false;
  bool same = false;
  double expected_diagonal = 0;
  double max_deviation = 0;
};

/// Orthogonality of matrix coefficients E_g[pi1(g)_{i1 j1} conj(pi2(g)_{i2 j2})]
/// in unitary form: all zero for non-isomorphic irreducibles, and 1/d on
/// matching index pairs when pi1 and pi2 are the same representation.
inline PeterWeylReport peter_weyl_check(const Representation& a, const Representation& b, double tol = 1e-9) {
  if (a.group != b.group) throw PreconditionError("Peter-Weyl: representations of different groups");
  const Character ca = character(a), cb = character(b);
  if (character_inner_product(ca, ca) != 1 || character_inner_product(cb, cb) != 1)
    throw PreconditionError("Peter-Weyl: representations must be irreducible");
  PeterWeylReport rep;
  rep.same = a.matrices == b.matrices;
  if (!rep.same && character_inner_product(ca, cb) != 0)
    throw PreconditionError("Peter-Weyl: isomorphic but distinct realizations are not compared");
  rep.expected_diagonal = rep.same ? 1.0 / static_cast<double>(a.dim) : 0.0;
  const auto ua = unitarize(a);
  const auto ub = rep.same ? ua : unitarize(b);
  const auto n = static_cast<double>(ua.size());
  const auto da = static_cast<Eigen::Index>(a.dim), db = static_cast<Eigen::Index>(b.dim);
  for (Eigen::Index i1 = 0; i1 < da; ++i1)
    for (Eigen::Index j1 = 0; j1 < da; ++j1)
      for (Eigen::Index i2 = 0; i2 < db; ++i2)
        for (Eigen::Index j2 = 0; j2 < db; ++j2) {
          std::complex<double> acc = 0;
          for (std::size_t g = 0; g < ua.size(); ++g) acc += ua[g](i1, j1) * std::conj(ub[g](i2, j2));
          acc /= n;
          const double want = (rep.same && i1 == i2 && j1 == j2) ? rep.expected_diagonal : 0.0;
          rep.max_deviation = std::max(rep.max_deviation, std::abs(acc - want));
        }
  rep.pass = rep.max_deviation <= tol;
  return rep;
}

}  // namespace ramlift
