#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ramlift/matrix.hpp"
#include "ramlift/ring.hpp"

using namespace ramlift;

namespace {

Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = e(rng);
  return a;
}

}  // namespace

TEST(Berkowitz, MatchesInterpolatedCharpoly) {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 8; ++t) {
      const auto a = random_matrix(rng, n, -4, 4);
      const RatPoly got(berkowitz_charpoly(a));
      EXPECT_EQ(got, oracle::interpolated_charpoly(a)) << "n=" << n;
    }
}

TEST(Berkowitz, DeterminantMatchesLeibniz) {
  std::mt19937 rng(12);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto a = random_matrix(rng, n, -9, 9);
    EXPECT_EQ(determinant(a), n == 0 ? Rational(1) : oracle::leibniz(a));
  }
}

TEST(Berkowitz, CyclotomicDeterminantMatchesLeibniz) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> k(0, 11), c(-2, 2);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
    Matrix<CycloRat> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = CycloRat::zeta_power(k(rng)) * CycloRat(c(rng));
    EXPECT_EQ(determinant(a), oracle::leibniz(a));
  }
}

TEST(Matrix, RankOneAndTrace) {
  Matrix<Rational> a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  EXPECT_TRUE(has_rank_one(a));
  EXPECT_EQ(trace(a), Rational(5));
  a(1, 1) = 5;
  EXPECT_FALSE(has_rank_one(a));
  EXPECT_FALSE(has_rank_one(Matrix<Rational>(3, 3)));
  EXPECT_EQ(Matrix<Rational>::identity(3) * a.identity(3), Matrix<Rational>::identity(3));
}

TEST(SafeInt, OverflowThrows) {
  const SafeInt big(std::numeric_limits<long long>::max());
  EXPECT_THROW(big + SafeInt(1), ArithmeticOverflow);
  EXPECT_THROW(big * SafeInt(2), ArithmeticOverflow);
  EXPECT_EQ((SafeInt(6) * SafeInt(-7)).value(), -42);
}

TEST(Cyclo, RootsOfUnity) {
  const CycloInt z = CycloInt::zeta_power(1);
  CycloInt p(1);
  for (int i = 0; i < 12; ++i) {
    EXPECT_EQ(p, CycloInt::zeta_power(i));
    p = p * z;
  }
  EXPECT_EQ(p, CycloInt(1));
  EXPECT_EQ(CycloInt::zeta_power(6), CycloInt(-1));
  EXPECT_EQ(CycloInt::zeta_power(4) + CycloInt::zeta_power(8), CycloInt(-1));
  EXPECT_EQ(z * z.conj(), CycloInt(1));
  EXPECT_NEAR(std::abs(z.to_complex() - std::polar(1.0, M_PI / 6)), 0, 1e-15);
  const CycloRat w = CycloRat::zeta_power(1) + CycloRat(2);
  EXPECT_EQ(w * inverse(w), CycloRat(1));
}
