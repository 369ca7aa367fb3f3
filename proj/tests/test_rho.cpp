#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "ramlift/rho.hpp"

using namespace ramlift;

namespace {

/// Top eigenvalue of the radius-R ball of the universal cover around
/// `root`, built explicitly as a tree.
double explicit_ball_radius(const OrientedMultigraph& g, int root, int radius) {
  struct Node {
    int vertex;
    std::optional<OrientedEdge> in;
    int depth;
    int parent;
  };
  std::vector<Node> nodes{{root, std::nullopt, 0, -1}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node cur = nodes[i];
    if (cur.depth == radius) continue;
    for (const auto& e : g.outgoing(cur.vertex)) {
      if (cur.in && e == cur.in->reversed()) continue;
      nodes.push_back({g.target(e), e, cur.depth + 1, static_cast<int>(i)});
    }
  }
  const auto n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) {
    a(i, nodes[static_cast<std::size_t>(i)].parent) = 1;
    a(nodes[static_cast<std::size_t>(i)].parent, i) = 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(n - 1);
}

}  // namespace

TEST(Rho, RegularClosedForm) {
  const auto r = rho(OrientedMultigraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(r.method, "closed-form");
  EXPECT_EQ(r.lower, Rational(2));
  EXPECT_EQ(r.upper, Rational(2));
  const auto theta = rho(OrientedMultigraph(2, {{0, 1}, {0, 1}, {0, 1}}));
  EXPECT_LT(theta.lower * theta.lower, 8);
  EXPECT_GT(theta.upper * theta.upper, 8);
  ASSERT_TRUE(theta.poly);
  EXPECT_EQ(*theta.poly, (RatPoly{-8, 0, 1}));
}

TEST(Rho, BiregularClosedForm) {
  // K_{2,3}: degrees 3 and 2, rho = sqrt 2 + 1
  const auto r = rho(OrientedMultigraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(r.method, "closed-form");
  EXPECT_LE(r.lower, r.upper);
  EXPECT_NEAR(to_double(r.lower), std::sqrt(2.0) + 1, 1e-11);
  ASSERT_TRUE(r.poly);
  EXPECT_EQ(compare_largest_roots(*r.poly, RatPoly{-1, -2, 1}), 0);
}

TEST(Rho, TreesAreExact) {
  const auto k2 = rho(OrientedMultigraph(2, {{0, 1}}));
  EXPECT_EQ(k2.method, "tree-exact");
  EXPECT_EQ(k2.lower, Rational(1));
  EXPECT_EQ(k2.upper, Rational(1));
  const auto star = rho(OrientedMultigraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_LT(star.lower * star.lower, 3);
  EXPECT_GT(star.upper * star.upper, 3);
}

TEST(Rho, BallIterationBracketsExplicitBalls) {
  const OrientedMultigraph pan(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  const auto r = rho(pan);
  EXPECT_EQ(r.method, "ball-iteration");
  EXPECT_FALSE(r.poly);
  EXPECT_LE(r.lower, r.upper);
  for (int radius : {4, 8, 10}) EXPECT_GE(to_double(r.lower) + 1e-9, explicit_ball_radius(pan, 0, radius));
  EXPECT_LE(to_double(r.upper), 2 * std::sqrt(2.0) + 1e-11);
  // and ball iteration from the same root agrees with the explicit ball
  EXPECT_NEAR(detail::ball_spectral_radius(pan, 0, 6, 3.0), explicit_ball_radius(pan, 0, 6), 1e-9);
}

TEST(Rho, RejectsDisconnected) { EXPECT_THROW(rho(OrientedMultigraph(3, {{0, 1}})), PreconditionError); }
