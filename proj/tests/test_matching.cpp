#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramlift/corpus.hpp"
#include "ramlift/matching.hpp"

using namespace ramlift;

namespace {

const OrientedMultigraph k4_minus_edge(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});

}  // namespace

TEST(Matching, CountsAgainstSubsetEnumeration) {
  for (const auto& [name, g] : generate_corpus(4, 5)) {
    const auto got = matching_counts(g);
    const auto want = oracle::matching_counts(g);
    for (std::size_t k = 0; k < std::max(got.size(), want.size()); ++k) {
      const Integer a = k < got.size() ? got[k] : Integer(0);
      const long b = k < want.size() ? want[k] : 0;
      EXPECT_EQ(a, b) << name << " k=" << k;
    }
  }
}

TEST(Matching, KnownPolynomials) {
  EXPECT_EQ(matching_poly(k4_minus_edge), (RatPoly{2, 0, -5, 0, 1}));
  EXPECT_EQ(matching_poly(OrientedMultigraph(3, {{0, 1}, {1, 2}, {2, 0}})), (RatPoly{0, -3, 0, 1}));
  EXPECT_EQ(matching_poly(OrientedMultigraph(1, {{0, 0}})), (RatPoly{0, 1}));
}

TEST(DMatching, DegreeOneIsTheMatchingPolynomial) {
  for (const auto& [name, g] : generate_corpus(4, 4)) EXPECT_EQ(d_matching_poly(g, 1), matching_poly(g)) << name;
}

TEST(DMatching, K4MinusEdgeAtThree) {
  const RatPoly want(std::vector<Rational>{4, 0, frac(-178, 3), 0, 180, 0, -189, 0, 81, 0, -15, 0, 1});
  EXPECT_EQ(d_matching_poly(k4_minus_edge, 3), want);
}

TEST(DMatching, AgreesWithCoveringAverage) {
  const std::vector<OrientedMultigraph> graphs{
      OrientedMultigraph(2, {{0, 1}}), OrientedMultigraph(3, {{0, 1}, {1, 2}, {2, 0}}),
      OrientedMultigraph(2, {{0, 1}, {0, 1}, {0, 1}}), OrientedMultigraph(1, {{0, 0}}),
      OrientedMultigraph(2, {{0, 0}, {0, 1}})};
  for (const auto& g : graphs)
    for (int d = 1; d <= 3; ++d) EXPECT_EQ(d_matching_poly(g, d), d_matching_poly_oracle(g, d)) << d;
}

TEST(DMatching, LoopWeights) {
  // bouquet with one loop: the d-coverings are 2-regular, M_2 = x^2 - 1
  const OrientedMultigraph loop(1, {{0, 0}});
  EXPECT_EQ(d_matching_poly(loop, 2), (RatPoly{-1, 0, 1}));
  EXPECT_EQ(d_matching_poly(loop, 3), (RatPoly{0, -2, 0, 1}));
}

TEST(DMatching, EnumerationIsPruned) {
  long count = 0;
  enumerate_multimatchings(OrientedMultigraph(2, {{0, 1}, {0, 1}}), 2, [&](const MultiMatching& m) {
    for (int v : vertex_load(OrientedMultigraph(2, {{0, 1}, {0, 1}}), m)) EXPECT_LE(v, 2);
    ++count;
  });
  // m(e1) + m(e2) <= 2
  EXPECT_EQ(count, 6);
}

TEST(DMatching, OracleRespectsCap) {
  EXPECT_THROW(d_matching_poly_oracle(k4_minus_edge, 4, 1000), CapExceeded);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(factorial(5), 120);
}
