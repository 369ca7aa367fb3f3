#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramlift/cover.hpp"

using namespace ramlift;

namespace {

Matrix<Rational> to_rational_matrix(const Matrix<SafeInt>& a) {
  return a.map<Rational>([](SafeInt v) { return to_rational(v); });
}

}  // namespace

TEST(Covering, StructureAndDegrees) {
  const OrientedMultigraph g(2, {{0, 1}, {0, 1}, {0, 0}});
  const std::vector<Permutation> sigma{Permutation({0, 1, 2}), Permutation({1, 2, 0}), Permutation({0, 2, 1})};
  const auto h = build_covering(g, sigma);
  EXPECT_EQ(h.vertex_count(), 6);
  EXPECT_EQ(h.edge_count(), 9u);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(h.degree(v), g.degree(v / 3));
  EXPECT_EQ(h.edge(4).head, 1);
  EXPECT_EQ(h.edge(4).tail, 3 + 2);
}

TEST(Covering, CharpolyAgainstInterpolation) {
  const OrientedMultigraph g(2, {{0, 1}, {0, 1}, {0, 0}});
  for (const auto& a : all_permutations(3))
    for (const auto& b : all_permutations(3)) {
      const std::vector<Permutation> sigma{Permutation::identity(3), a, b};
      const auto h = build_covering(g, sigma);
      const RatPoly full = oracle::interpolated_charpoly(to_rational_matrix(adjacency(h)));
      EXPECT_EQ(full, char_poly(g) * new_char_poly(g, sigma));
    }
}

TEST(Covering, LoopsContributeTwiceToAdjacency) {
  const OrientedMultigraph bouquet(1, {{0, 0}});
  EXPECT_EQ(char_poly(bouquet), (RatPoly{-2, 1}));
  // the 2-lift of a loop by a transposition is K2 with a double edge
  EXPECT_EQ(new_char_poly(bouquet, {Permutation({1, 0})}), (RatPoly{2, 1}));
  EXPECT_EQ(new_char_poly(bouquet, {Permutation({0, 1})}), (RatPoly{-2, 1}));
}

TEST(Twisted, CyclicEdgeOnK2) {
  const OrientedMultigraph k2(2, {{0, 1}});
  const auto pi = build_cyclic(3);
  const CycloMatrix a = twisted_adjacency(k2, GroupLabeling{1}, pi);
  EXPECT_EQ(a(0, 0), CycloInt(0));
  EXPECT_EQ(a(0, 1), CycloInt::zeta_power(4));
  EXPECT_EQ(a(1, 0), CycloInt::zeta_power(8));
  EXPECT_EQ(char_poly(a), (RatPoly{-1, 0, 1}));
}

TEST(Twisted, NonHermitianInputHasImaginaryResidue) {
  CycloMatrix a(1, 1);
  a(0, 0) = CycloInt::zeta_power(4);
  EXPECT_THROW(char_poly(a), ImaginaryResidue);
}

TEST(Twisted, SpanningTreeNormalizationKeepsSpectrum) {
  const OrientedMultigraph g(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
  const std::vector<Permutation> sigma{Permutation({1, 2, 0}), Permutation({1, 0, 2}), Permutation({2, 1, 0}),
                                       Permutation({0, 2, 1})};
  auto mul = [](const Permutation& a, const Permutation& b) { return a * b; };
  auto inv = [](const Permutation& a) { return a.inverse(); };
  const auto normalized = spanning_tree_normalize(g, sigma, Permutation::identity(3), mul, inv);
  EXPECT_EQ(new_char_poly(g, sigma), new_char_poly(g, normalized));
}

TEST(Twisted, CyclicNumericSpectrumMatchesExact) {
  const OrientedMultigraph g(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
  const GroupLabeling labels{0, 1, 2, 1};
  const RatPoly p = char_poly(twisted_adjacency(g, labels, build_cyclic(3)));
  for (double x : cyclic_spectrum_numeric(g, labels, 3)) EXPECT_NEAR(p.eval(Rational(x)).get_d(), 0.0, 1e-9);
  // m = 5 has no exact mode, but the numeric path still works
  const auto five = cyclic_spectrum_numeric(g, {0, 1, 2, 4}, 5);
  double trace = 0;
  for (double x : five) trace += x;
  EXPECT_NEAR(trace, 0.0, 1e-12);
}
