#include <gtest/gtest.h>

#include <map>

#include "ramlift/perm.hpp"

using namespace ramlift;

namespace {

auto mul = [](const Permutation& a, const Permutation& b) { return a * b; };

/// Distribution of the product by enumerating every tuple of choices.
std::map<Permutation, Rational> brute_product(const std::vector<FactorDistribution<Permutation>>& fs, int r) {
  std::map<Permutation, Rational> out;
  std::vector<std::size_t> idx(fs.size(), 0);
  for (;;) {
    Permutation p = Permutation::identity(r);
    Rational w = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      p = p * fs[i].support[idx[i]].first;
      w *= fs[i].support[idx[i]].second;
    }
    out[p] += w;
    std::size_t i = 0;
    while (i < fs.size() && ++idx[i] == fs[i].size()) idx[i++] = 0;
    if (i == fs.size()) break;
  }
  return out;
}

}  // namespace

TEST(Permutation, ComposesLeftToRight) {
  const Permutation a({1, 2, 0}), b({1, 0, 2});
  const Permutation ab = a * b;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(ab(i), b(a(i)));
  EXPECT_EQ((a * a.inverse()), Permutation::identity(3));
  EXPECT_EQ(a.sign(), 1);
  EXPECT_EQ(b.sign(), -1);
  EXPECT_EQ(a.to_string(), "[1,2,0]");
  EXPECT_THROW(Permutation({0, 0, 1}), PreconditionError);
}

TEST(Permutation, MatrixIsAHomomorphism) {
  for (const auto& a : all_permutations(4))
    for (const auto& b : {Permutation({1, 0, 3, 2}), Permutation({3, 0, 1, 2})})
      EXPECT_EQ((a * b).matrix<Rational>(), a.matrix<Rational>() * b.matrix<Rational>());
}

TEST(Permutation, Enumeration) {
  const auto all = all_permutations(4);
  EXPECT_EQ(all.size(), 24u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_TRUE(all.front().is_identity());
}

TEST(Factorization, SwapFactorsAreUniform) {
  for (int r = 2; r <= 5; ++r) {
    const auto f = swap_factorization(r);
    const auto prod = product_distribution(f.factors, Permutation::identity(r), mul);
    const auto brute = brute_product(f.factors, r);
    ASSERT_EQ(prod.size(), brute.size());
    long n = 1;
    for (int k = 2; k <= r; ++k) n *= k;
    EXPECT_EQ(static_cast<long>(prod.size()), n);
    for (const auto& [p, w] : prod.support) {
      EXPECT_EQ(w, frac(1, n));
      EXPECT_EQ(brute.at(p), w);
    }
    EXPECT_EQ(tv_distance_from_uniform(prod, static_cast<std::size_t>(n)), Rational(0));
  }
}

TEST(Factorization, XyzIsUniformOnS3) {
  const auto f = xyz_s3();
  ASSERT_EQ(f.factors.size(), 3u);
  const auto brute = brute_product(f.factors, 3);
  EXPECT_EQ(brute.size(), 6u);
  for (const auto& [p, w] : brute) EXPECT_EQ(w, frac(1, 6)) << p.to_string();
}

TEST(Factorization, TotalVariation) {
  FactorDistribution<Permutation> point{{{Permutation::identity(3), Rational(1)}}};
  EXPECT_EQ(tv_distance_from_uniform(point, 6), frac(5, 6));
  FactorDistribution<Permutation> bad{{{Permutation::identity(2), frac(1, 3)}}};
  EXPECT_THROW(bad.validate(), PreconditionError);
}

TEST(Factorization, CyclicUniform) {
  const auto f = cyclic_uniform(4);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].size(), 4u);
  for (const auto& [k, w] : f.factors[0].support) EXPECT_EQ(w, frac(1, 4));
}
