#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ramlift/errors.hpp"
#include "ramlift/matrix.hpp"
#include "ramlift/rational.hpp"

namespace ramlift {

/// Permutation of the symbols 0..r-1, stored as its image list.
/// Products compose left to right: (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> hit(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || hit[static_cast<std::size_t>(v)])
        throw PreconditionError("permutation: image list is not a bijection");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int r) {
    std::vector<int> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  static Permutation transposition(int r, int a, int b) {
    Permutation p = identity(r);
    std::swap(p.img_.at(static_cast<std::size_t>(a)), p.img_.at(static_cast<std::size_t>(b)));
    return p;
  }

  /// i -> i + k (mod r).
  static Permutation rotation(int r, int k) {
    std::vector<int> v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = ((i + k) % r + r) % r;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const { return img_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw PreconditionError("permutation product: sizes differ");
    std::vector<int> v(a.img_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.img_[static_cast<std::size_t>(a.img_[i])];
    Permutation p;
    p.img_ = std::move(v);
    return p;
  }

  Permutation inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return p;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i)) return false;
    return true;
  }

  int sign() const {
    std::vector<bool> seen(img_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// P[i][sigma(i)] = 1, so that P(a * b) = P(a) P(b).
  template <class T>
  Matrix<T> matrix() const {
    Matrix<T> m(img_.size(), img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) m(i, static_cast<std::size_t>(img_[i])) = T(1);
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
    return s + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// All permutations of 0..r-1 in lexicographic order.
inline std::vector<Permutation> all_permutations(int r) {
  if (r < 0) throw PreconditionError("all_permutations: negative size");
  std::vector<int> v(static_cast<std::size_t>(r));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Finitely supported probability distribution with exact weights.
template <class E>
struct FactorDistribution {
  std::vector<std::pair<E, Rational>> support;

  /// Throws unless the weights are positive, sum to 1 and the support is
  /// duplicate-free.
  void validate() const {
    if (support.empty()) throw PreconditionError("distribution: empty support");
    Rational total = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i].second <= 0) throw PreconditionError("distribution: non-positive weight");
      total += support[i].second;
      for (std::size_t j = 0; j < i; ++j)
        if (support[j].first == support[i].first) throw PreconditionError("distribution: repeated support element");
    }
    if (total != 1) throw PreconditionError("distribution: weights sum to " + to_string(total));
  }

  std::size_t size() const { return support.size(); }
};

/// Ordered factors whose product (in factor order) is the edge's random element.
template <class E>
struct EdgeFactorization {
  std::vector<FactorDistribution<E>> factors;
  /// Total-variation distance of the product from uniform (0 when exact).
  Rational epsilon = 0;
};

/// Distribution of x * y for independent x ~ a, y ~ b. The result lists
/// elements in first-appearance order, merging equal products.
template <class E, class Mul>
FactorDistribution<E> convolve(const FactorDistribution<E>& a, const FactorDistribution<E>& b, Mul&& mul) {
  FactorDistribution<E> out;
  std::map<E, std::size_t> where;
  for (const auto& [x, wx] : a.support) {
    for (const auto& [y, wy] : b.support) {
      E z = mul(x, y);
      auto it = where.find(z);
      if (it == where.end()) {
        where.emplace(z, out.support.size());
        out.support.emplace_back(std::move(z), wx * wy);
      } else {
        out.support[it->second].second += wx * wy;
      }
    }
  }
  return out;
}

template <class E, class Mul>
FactorDistribution<E> product_distribution(const std::vector<FactorDistribution<E>>& factors, const E& identity,
                                           Mul&& mul) {
  FactorDistribution<E> acc{{{identity, Rational(1)}}};
  for (const auto& f : factors) acc = convolve(acc, f, mul);
  return acc;
}

/// Sum over the group of |p(g) - 1/|G||, halved. Elements absent from `p`
/// have probability 0.
template <class E>
Rational tv_distance_from_uniform(const FactorDistribution<E>& p, std::size_t group_order) {
  const Rational u = frac(1, static_cast<long>(group_order));
  Rational total = 0;
  for (const auto& [g, w] : p.support) total += abs(Rational(w - u));
  total += u * static_cast<unsigned long>(group_order - p.support.size());
  return total / 2;
}

inline constexpr int kDefaultSymmetricCap = 8;

inline FactorDistribution<Permutation> uniform_sr(int r, int cap = kDefaultSymmetricCap) {
  if (r < 1) throw PreconditionError("uniform_sr: r must be at least 1");
  if (r > cap) throw CapExceeded("uniform_sr: r = " + std::to_string(r) + " exceeds the cap " + std::to_string(cap));
  auto perms = all_permutations(r);
  const Rational w = frac(1, static_cast<long>(perms.size()));
  FactorDistribution<Permutation> d;
  for (auto& p : perms) d.support.emplace_back(std::move(p), w);
  return d;
}

inline FactorDistribution<Permutation> bernoulli_swap(int r, int a, int b, const Rational& p) {
  return {{{Permutation::identity(r), 1 - p}, {Permutation::transposition(r, a, b), p}}};
}

/// binom(r, 2) two-point factors whose product is uniform on S_r: the
/// factors for S_{r-1} (on 0..r-2), then for j = 1..r-1 a swap of
/// (j-1, r-1) with probability 1/(r-j+1).
inline EdgeFactorization<Permutation> swap_factorization(int r) {
  if (r < 2) throw PreconditionError("swap_factorization: r must be at least 2");
  EdgeFactorization<Permutation> out;
  for (int s = 2; s <= r; ++s)
    for (int j = 1; j <= s - 1; ++j) out.factors.push_back(bernoulli_swap(r, j - 1, s - 1, frac(1, s - j + 1)));
  return out;
}

inline EdgeFactorization<Permutation> xyz_s3() {
  EdgeFactorization<Permutation> out;
  out.factors.push_back(bernoulli_swap(3, 0, 1, frac(1, 2)));
  out.factors.push_back(bernoulli_swap(3, 0, 2, frac(2, 3)));
  out.factors.push_back(bernoulli_swap(3, 0, 1, frac(1, 2)));
  return out;
}

/// One factor, uniform on Z/m (elements 0..m-1).
inline EdgeFactorization<int> cyclic_uniform(int m) {
  if (m < 2) throw PreconditionError("cyclic_uniform: m must be at least 2");
  FactorDistribution<int> f;
  for (int k = 0; k < m; ++k) f.support.emplace_back(k, frac(1, m));
  return {{f}, 0};
}

/// `steps` lazy-walk factors {g: 1/3, g^-1: 1/3, id: 1/3}, cycling through
/// the generators. `Group` supplies size(), identity(), mul(a, b),
/// inverse(a) and closure(generators) over integer element ids.
template <class Group>
EdgeFactorization<int> lazy_walk_factorization(const Group& group, const std::vector<int>& generators, int steps) {
  if (generators.empty()) throw PreconditionError("lazy walk: no generators");
  if (steps < 0) throw PreconditionError("lazy walk: negative step count");
  if (group.closure(generators).size() != group.size())
    throw PreconditionError("lazy walk: generators do not generate the group");
  EdgeFactorization<int> out;
  const Rational third = frac(1, 3);
  for (int s = 0; s < steps; ++s) {
    const int g = generators[static_cast<std::size_t>(s) % generators.size()];
    FactorDistribution<int> f;
    for (int x : {g, group.inverse(g), group.identity()}) {
      auto it = std::find_if(f.support.begin(), f.support.end(), [&](const auto& p) { return p.first == x; });
      if (it == f.support.end()) f.support.emplace_back(x, third);
      else it->second += third;
    }
    out.factors.push_back(std::move(f));
  }
  const auto prod =
      product_distribution(out.factors, group.identity(), [&](int a, int b) { return group.mul(a, b); });
  out.epsilon = tv_distance_from_uniform(prod, group.size());
  return out;
}

}  // namespace ramlift
