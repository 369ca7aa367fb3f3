#include <gtest/gtest.h>

#include "ramlift/corpus.hpp"
#include "ramlift/matching.hpp"
#include "ramlift/search.hpp"

using namespace ramlift;

namespace {

const OrientedMultigraph theta(2, {{0, 1}, {0, 1}, {0, 1}});
const OrientedMultigraph c3(3, {{0, 1}, {1, 2}, {2, 0}});

SearchState uniform_state(const OrientedMultigraph& g, const LiftGroup& lg) {
  std::vector<std::vector<FactorDistribution<int>>> f(g.edge_count(), lg.exact_factors);
  return make_search_state(g, lg.pi, std::move(f));
}

}  // namespace

TEST(LiftGroup, Descriptors) {
  EXPECT_EQ(make_lift_group("std:3").d, 2);
  EXPECT_EQ(make_lift_group("cyclic:4").d, 1);
  EXPECT_EQ(make_lift_group("gm1d:2,2").pi.group->size(), 8u);
  EXPECT_EQ(make_lift_group("gmkd:3,1,2").descriptor, "gm1d:3,2");
  EXPECT_THROW(make_lift_group("gmkd:4,2,2"), PreconditionError);
  EXPECT_THROW(make_lift_group("foo:3"), ParseError);
  EXPECT_THROW(make_lift_group("std:x"), ParseError);
  EXPECT_THROW(make_lift_group("cyclic:5"), PreconditionError);
  for (const char* desc : {"std:2", "std:4", "cyclic:6", "gm1d:3,2"}) {
    const LiftGroup lg = make_lift_group(desc);
    for (const auto& f : lg.exact_factors) EXPECT_TRUE(is_rank_one(f, lg.pi)) << desc;
    const FiniteGroup& g = *lg.pi.group;
    auto mul = [&](int a, int b) { return g.mul(a, b); };
    const auto prod = product_distribution(lg.exact_factors, g.identity(), mul);
    EXPECT_EQ(tv_distance_from_uniform(prod, g.size()), Rational(0)) << desc;
  }
}

TEST(Expected, UniformStateGivesTheDMatchingPolynomial) {
  for (const auto& [name, g] : generate_corpus(3, 3)) {
    for (int r : {2, 3}) {
      const LiftGroup lg = make_lift_group("std:" + std::to_string(r));
      CharPolyCache cache;
      EXPECT_EQ(expected_char_poly(uniform_state(g, lg), cache), d_matching_poly(g, r - 1)) << name << " r=" << r;
    }
  }
}

TEST(Expected, RespectsCap) {
  const LiftGroup lg = make_lift_group("std:3");
  CharPolyCache cache;
  EXPECT_THROW(expected_char_poly(uniform_state(theta, lg), cache, 10), CapExceeded);
}

TEST(Greedy, ThetaTwoLiftMatchesExhaustiveSignings) {
  const LiftCertificate cert = find_lift(theta, 2);
  EXPECT_EQ(cert.verdict, kVerdictRamanujan);
  const LiftGroup lg = make_lift_group("std:2");
  const auto sigma = labels_as_permutations(lg, cert.labels);
  bool seen = false;
  long good = 0;
  for_each_sr_labeling(3, 2, 1e6, [&](const std::vector<Permutation>& s) {
    const RatPoly p = new_char_poly(theta, s);
    if (compare_largest_roots(p, RatPoly{-8, 0, 1}) <= 0 && compare_largest_roots(p.reflected(), RatPoly{-8, 0, 1}) <= 0)
      ++good;
    if (s == sigma) seen = p == cert.new_poly;
  });
  EXPECT_TRUE(seen);
  EXPECT_EQ(good, 6);
}

TEST(Greedy, TripleEdgeSigningsViaCyclicTwo) {
  const LiftCertificate cert = find_lift_group(theta, make_lift_group("cyclic:2"));
  EXPECT_EQ(cert.verdict, kVerdictRamanujan);
  // every signing of the triple edge has new eigenvalues +-(sum of signs), so
  // the best ones are those with mixed signs
  int sum = 0;
  for (int k : cert.labels) sum += k == 0 ? 1 : -1;
  EXPECT_EQ(std::abs(sum), 1);
  EXPECT_EQ(cert.new_poly, (RatPoly{-1, 0, 1}));
}

TEST(Greedy, StepsAreMonotoneAndInterlacing) {
  GreedyRun run;
  const LiftCertificate cert = find_lift(OrientedMultigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}), 3, {}, &run);
  EXPECT_EQ(run.initial, cert.matching_poly);
  ASSERT_FALSE(run.steps.empty());
  for (const auto& s : run.steps) {
    EXPECT_LE(s.chosen_root.lower, s.mixture_root.upper);
    EXPECT_TRUE(common_interlacing(s.branches));
  }
  EXPECT_LE(compare_largest_roots(cert.new_poly, run.initial), 0);
}

TEST(Greedy, Deterministic) {
  const auto a = find_lift(c3, 3);
  const auto b = find_lift(c3, 3);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.new_poly, b.new_poly);
}

TEST(Greedy, RejectsLoopsAndNonRankOneStates) {
  EXPECT_THROW(find_lift(OrientedMultigraph(1, {{0, 0}}), 2), PreconditionError);
  const LiftGroup lg = make_lift_group("std:3");
  const OrientedMultigraph two_cycle(2, {{0, 1}, {0, 1}});
  const int id = lg.sym->id_of(Permutation::identity(3));
  const int rot = lg.sym->id_of(Permutation::rotation(3, 1));
  std::vector<std::vector<FactorDistribution<int>>> f{{FactorDistribution<int>{{{id, Rational(1)}}}},
                                                      {FactorDistribution<int>{{{id, frac(1, 2)}, {rot, frac(1, 2)}}}}};
  EXPECT_THROW(make_search_state(two_cycle, lg.pi, f), PreconditionError);
  SearchState s = make_search_state(two_cycle, lg.pi, f, false);
  CharPolyCache cache;
  const RatPoly mix = expected_char_poly(s, cache);
  EXPECT_EQ(mix, RatPoly(std::vector<Rational>{frac(17, 2), 0, -5, 0, 1}));
  EXPECT_THROW(greedy_step(s, mix, cache), InterlacingViolation);
}

TEST(Greedy, MonomialAndLazyFactorizations) {
  const LiftCertificate mono = find_lift_group(c3, make_lift_group("gm1d:2,2"));
  EXPECT_NE(mono.verdict, kVerdictFail);
  EXPECT_EQ(mono.new_poly.degree(), 6);
  const LiftGroup lg = make_lift_group("std:3");
  const auto lazy = edge_factorization(lg, "lazy:2");
  EXPECT_GT(lazy.epsilon, 0);
  const LiftCertificate c = find_lift_group(OrientedMultigraph(2, {{0, 1}, {0, 1}}), lg, "lazy:2");
  EXPECT_EQ(c.epsilon, lazy.epsilon);
  EXPECT_THROW(edge_factorization(lg, "walk"), ParseError);
}

TEST(Subdivision, BouquetRoute) {
  const OrientedMultigraph bouquet(1, {{0, 0}, {0, 0}});
  for (int r : {2, 3}) {
    const LiftCertificate c = lift_regular_with_loops(bouquet, r);
    EXPECT_EQ(c.route, "subdivision");
    EXPECT_EQ(c.verdict, kVerdictRamanujan);
    EXPECT_LE(compare_largest_roots(c.new_poly, RatPoly{-12, 0, 1}), 0);
    const LiftCertificate again = recertify(c);
    EXPECT_EQ(again.verdict, c.verdict);
    EXPECT_EQ(again.new_poly, c.new_poly);
  }
  EXPECT_THROW(lift_regular_with_loops(OrientedMultigraph(2, {{0, 0}, {0, 1}}), 2), PreconditionError);
}

TEST(Subdivision, TransportComposesHalfEdges) {
  const OrientedMultigraph g(1, {{0, 0}});
  const Permutation a({1, 2, 0}), b({0, 2, 1});
  const auto out = transport_from_subdivision(g, {a, b});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], a.inverse() * b);
}
