#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ramlift/errors.hpp"
#include "ramlift/matrix.hpp"
#include "ramlift/perm.hpp"
#include "ramlift/ring.hpp"

namespace ramlift {

using CycloMatrix = Matrix<CycloInt>;

struct CycloMatrixHash {
  std::size_t operator()(const CycloMatrix& m) const {
    std::size_t h = m.rows() * 31 + m.cols();
    for (const auto& x : m.data()) h = h * 1000003u ^ x.hash();
    return h;
  }
};

inline constexpr std::size_t kDefaultGroupCap = 5040;

/// Finite group of exact matrices over Z[z12], enumerated in full. Elements
/// are addressed by dense ids 0..size-1.
class FiniteGroup {
 public:
  /// Closure of the generators under multiplication.
  static FiniteGroup generated_by(const std::vector<CycloMatrix>& generators, std::size_t cap = kDefaultGroupCap) {
    if (generators.empty()) throw PreconditionError("group: no generators");
    const std::size_t d = generators.front().rows();
    std::vector<CycloMatrix> elems{CycloMatrix::identity(d)};
    std::unordered_map<CycloMatrix, int, CycloMatrixHash> index{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& g : generators) {
        if (g.rows() != d || g.cols() != d) throw PreconditionError("group: generators differ in size");
        CycloMatrix p = elems[i] * g;
        if (index.count(p)) continue;
        if (elems.size() >= cap) throw CapExceeded("group: order exceeds the cap " + std::to_string(cap));
        index.emplace(p, static_cast<int>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
    return FiniteGroup(std::move(elems));
  }

  /// Uses the elements in the given order; they must form a group.
  explicit FiniteGroup(std::vector<CycloMatrix> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw PreconditionError("group: empty element list");
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!index_.emplace(elems_[i], static_cast<int>(i)).second) throw PreconditionError("group: repeated element");
    }
    const auto id = index_of(CycloMatrix::identity(elems_[0].rows()));
    if (!id) throw PreconditionError("group: identity missing");
    identity_ = *id;
    const std::size_t n = elems_.size();
    if (n <= kTableLimit) {
      table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = lookup(elems_[a] * elems_[b]);
    }
    inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      int p = static_cast<int>(a), prev = identity_;
      while (p != identity_) {
        prev = p;
        p = mul(p, static_cast<int>(a));
      }
      inverse_[a] = prev;
    }
  }

  std::size_t size() const { return elems_.size(); }
  std::size_t degree() const { return elems_[0].rows(); }
  int identity() const { return identity_; }
  const CycloMatrix& element(int i) const { return elems_.at(static_cast<std::size_t>(i)); }
  const std::vector<CycloMatrix>& elements() const { return elems_; }

  std::optional<int> index_of(const CycloMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int mul(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elems_.size() + static_cast<std::size_t>(b)];
    return lookup(element(a) * element(b));
  }
  int inverse(int a) const { return inverse_.at(static_cast<std::size_t>(a)); }

  /// Ids of the subgroup generated by `gens`, in discovery order.
  std::vector<int> closure(const std::vector<int>& gens) const {
    std::vector<int> out{identity_};
    std::vector<bool> seen(size(), false);
    seen[static_cast<std::size_t>(identity_)] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int g : gens) {
        const int p = mul(out[i], g);
        if (!seen[static_cast<std::size_t>(p)]) {
          seen[static_cast<std::size_t>(p)] = true;
          out.push_back(p);
        }
      }
    return out;
  }

 private:
  static constexpr std::size_t kTableLimit = 1024;

  int lookup(const CycloMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw PreconditionError("group: element list is not closed under multiplication");
    return it->second;
  }

  std::vector<CycloMatrix> elems_;
  std::unordered_map<CycloMatrix, int, CycloMatrixHash> index_;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// A finite-dimensional representation: one exact matrix per group element.
/// Matrices act on row vectors, so pi(a * b) = pi(a) pi(b).
struct Representation {
  std::shared_ptr<const FiniteGroup> group;
  std::size_t dim = 0;
  std::vector<CycloMatrix> matrices;
  std::string name;

  const CycloMatrix& operator()(int g) const { return matrices.at(static_cast<std::size_t>(g)); }

  /// Throws unless pi is a homomorphism, checking every pair when the group
  /// has at most `exhaustive_limit` elements and a fixed sample otherwise.
  void validate(std::size_t exhaustive_limit = 120) const {
    const std::size_t n = group->size();
    if (matrices.size() != n) throw PreconditionError("representation: wrong number of matrices");
    for (const auto& m : matrices)
      if (m.rows() != dim || m.cols() != dim) throw PreconditionError("representation: matrix of the wrong size");
    const std::size_t step = n <= exhaustive_limit ? 1 : n / exhaustive_limit + 1;
    for (std::size_t a = 0; a < n; a += step)
      for (std::size_t b = 0; b < n; b += step) {
        const int ab = group->mul(static_cast<int>(a), static_cast<int>(b));
        if (!(matrices[a] * matrices[b] == matrices[static_cast<std::size_t>(ab)]))
          throw PreconditionError("representation '" + name + "' is not a homomorphism");
      }
  }
};

/// S_r with element ids in lexicographic order of image lists, acting by
/// permutation matrices.
struct SymmetricGroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<Permutation> perms;

  int id_of(const Permutation& p) const {
    const auto i = group->index_of(p.matrix<CycloInt>());
    if (!i) throw PreconditionError("symmetric group: permutation of the wrong size");
    return *i;
  }
  const Permutation& perm(int id) const { return perms.at(static_cast<std::size_t>(id)); }
};

inline SymmetricGroup make_symmetric_group(int r, int cap = 7) {
  if (r < 1) throw PreconditionError("symmetric group: r must be at least 1");
  if (r > cap) throw CapExceeded("symmetric group: r = " + std::to_string(r) + " exceeds the cap " + std::to_string(cap));
  SymmetricGroup s;
  s.perms = all_permutations(r);
  std::vector<CycloMatrix> mats;
  for (const auto& p : s.perms) mats.push_back(p.matrix<CycloInt>());
  s.group = std::make_shared<FiniteGroup>(std::move(mats));
  return s;
}

inline Representation build_perm(const SymmetricGroup& s) {
  return {s.group, static_cast<std::size_t>(s.perms.front().size()), s.group->elements(), "perm"};
}

inline Representation build_trivial(std::shared_ptr<const FiniteGroup> g) {
  Representation rep{g, 1, {}, "triv"};
  rep.matrices.assign(g->size(), CycloMatrix::identity(1));
  return rep;
}

inline Representation build_sign(const SymmetricGroup& s) {
  Representation rep{s.group, 1, {}, "sign"};
  for (const auto& p : s.perms) {
    CycloMatrix m(1, 1);
    m(0, 0) = CycloInt(p.sign());
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

/// Integer matrix of a permutation on the basis e_i - e_{r-1} (i < r-1) of
/// the sum-zero subspace.
inline CycloMatrix std_matrix(const Permutation& p) {
  const int r = p.size();
  const std::size_t d = static_cast<std::size_t>(r - 1);
  CycloMatrix m(d, d);
  const int last = p(r - 1);
  for (int i = 0; i + 1 < r; ++i) {
    if (p(i) != r - 1) m(static_cast<std::size_t>(i), static_cast<std::size_t>(p(i))) += CycloInt(1);
    if (last != r - 1) m(static_cast<std::size_t>(i), static_cast<std::size_t>(last)) -= CycloInt(1);
  }
  return m;
}

/// The standard (r-1)-dimensional representation of S_r.
inline Representation build_std(const SymmetricGroup& s) {
  const int r = s.perms.front().size();
  if (r < 2) throw PreconditionError("std: r must be at least 2");
  Representation rep{s.group, static_cast<std::size_t>(r - 1), {}, "std"};
  for (const auto& p : s.perms) rep.matrices.push_back(std_matrix(p));
  return rep;
}

inline bool divides_twelve(int m) { return m >= 1 && 12 % m == 0; }

/// Z/m as 1x1 matrices; element k is z_m^k. Requires m | 12.
inline Representation build_cyclic(int m) {
  if (!divides_twelve(m)) throw PreconditionError("cyclic: exact mode needs m dividing 12, got " + std::to_string(m));
  std::vector<CycloMatrix> elems;
  for (int k = 0; k < m; ++k) {
    CycloMatrix e(1, 1);
    e(0, 0) = CycloInt::zeta_power(static_cast<long long>(k) * (12 / m));
    elems.push_back(std::move(e));
  }
  auto g = std::make_shared<FiniteGroup>(elems);
  return {g, 1, std::move(elems), "cyclic:" + std::to_string(m)};
}

/// G(m, 1, d): d x d monomial matrices with m-th roots of unity as nonzero
/// entries, as its natural representation. Requires m | 12.
inline Representation build_g_m1d(int m, int d, std::size_t cap = kDefaultGroupCap) {
  if (!divides_twelve(m)) throw PreconditionError("gm1d: exact mode needs m dividing 12, got " + std::to_string(m));
  if (d < 1) throw PreconditionError("gm1d: d must be at least 1");
  std::vector<CycloMatrix> gens;
  for (int i = 0; i + 1 < d; ++i) gens.push_back(Permutation::transposition(d, i, i + 1).matrix<CycloInt>());
  CycloMatrix phase = CycloMatrix::identity(static_cast<std::size_t>(d));
  phase(0, 0) = CycloInt::zeta_power(12 / m);
  gens.push_back(phase);
  auto g = std::make_shared<FiniteGroup>(FiniteGroup::generated_by(gens, cap));
  return {g, static_cast<std::size_t>(d), g->elements(), "gm1d:" + std::to_string(m) + "," + std::to_string(d)};
}

/// Right regular representation: e_g -> e_{g h}.
inline Representation build_regular(std::shared_ptr<const FiniteGroup> g) {
  const std::size_t n = g->size();
  Representation rep{g, n, {}, "regular"};
  for (std::size_t h = 0; h < n; ++h) {
    CycloMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      m(a, static_cast<std::size_t>(g->mul(static_cast<int>(a), static_cast<int>(h)))) = CycloInt(1);
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

/// The group is the image itself: the given matrices must be closed.
inline Representation build_from_matrices(std::vector<CycloMatrix> elements, std::string name = "matrices") {
  auto g = std::make_shared<FiniteGroup>(elements);
  const std::size_t d = g->degree();
  return {g, d, std::move(elements), std::move(name)};
}

}  // namespace ramlift
