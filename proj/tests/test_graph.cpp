#include <gtest/gtest.h>

#include "ramlift/graph.hpp"
#include "ramlift/perm.hpp"

using namespace ramlift;

TEST(Graph, DegreesCountLoopsTwice) {
  const OrientedMultigraph g(2, {{0, 0}, {0, 1}, {0, 1}});
  EXPECT_EQ(g.degree(0), 4);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.max_degree(), 4);
  EXPECT_TRUE(g.has_loops());
  EXPECT_EQ(g.outgoing(0).size(), 4u);
  EXPECT_EQ(g.outgoing(1).size(), 2u);
  for (const auto& e : g.outgoing(0)) EXPECT_EQ(g.source(e), 0);
}

TEST(Graph, RejectsBadEndpoints) {
  EXPECT_THROW(OrientedMultigraph(2, {{0, 2}}), PreconditionError);
  EXPECT_THROW(OrientedMultigraph(2, {{-1, 0}}), PreconditionError);
}

TEST(Graph, Classification) {
  const auto k2 = classify(OrientedMultigraph(2, {{0, 1}}));
  EXPECT_TRUE(k2.bipartite);
  EXPECT_EQ(k2.regular_degree, 1);

  const auto c3 = classify(OrientedMultigraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_FALSE(c3.bipartite);
  EXPECT_EQ(c3.regular_degree, 2);
  EXPECT_FALSE(c3.biregular_degrees);

  const auto star = classify(OrientedMultigraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_TRUE(star.bipartite);
  EXPECT_FALSE(star.regular_degree);
  ASSERT_TRUE(star.biregular_degrees);
  EXPECT_EQ(star.biregular_degrees->first + star.biregular_degrees->second, 4);

  const auto loop = classify(OrientedMultigraph(1, {{0, 0}}));
  EXPECT_FALSE(loop.bipartite);
  EXPECT_EQ(loop.regular_degree, 2);

  EXPECT_FALSE(classify(OrientedMultigraph(3, {{0, 1}})).connected);
}

TEST(Graph, SubdivisionIsBipartiteWithMidpointsOfDegreeTwo) {
  const OrientedMultigraph bouquet(1, {{0, 0}, {0, 0}});
  const auto s = subdivide(bouquet);
  EXPECT_EQ(s.vertex_count(), 3);
  EXPECT_EQ(s.edge_count(), 4u);
  EXPECT_EQ(s.degree(0), 4);
  EXPECT_EQ(s.degree(1), 2);
  EXPECT_EQ(s.degree(2), 2);
  const auto rep = classify(s);
  EXPECT_TRUE(rep.bipartite);
  ASSERT_TRUE(rep.biregular_degrees);
  EXPECT_EQ(s.edge(2).head, 2);
  EXPECT_EQ(s.edge(3).tail, 0);
}

TEST(Graph, SpanningTreeNormalizationFixesTreeEdges) {
  const OrientedMultigraph g(4, {{0, 1}, {2, 1}, {2, 3}, {3, 0}, {1, 3}});
  const std::vector<Permutation> labels{Permutation({1, 2, 0}), Permutation({0, 2, 1}), Permutation({2, 1, 0}),
                                        Permutation({1, 0, 2}), Permutation({2, 0, 1})};
  auto mul = [](const Permutation& a, const Permutation& b) { return a * b; };
  auto inv = [](const Permutation& a) { return a.inverse(); };
  const auto out = spanning_tree_normalize(g, labels, Permutation::identity(3), mul, inv);
  const auto tree = bfs_spanning_tree(g);
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (tree.tree_edge[j]) {
      EXPECT_TRUE(out[j].is_identity()) << "edge " << j;
    }
  }
  EXPECT_EQ(std::count(tree.tree_edge.begin(), tree.tree_edge.end(), true), 3);
}
