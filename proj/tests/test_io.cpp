#include <gtest/gtest.h>

#include <filesystem>

#include "ramlift/corpus.hpp"
#include "ramlift/io.hpp"

using namespace ramlift;

namespace {

const OrientedMultigraph c3(3, {{0, 1}, {1, 2}, {2, 0}});

}  // namespace

TEST(Json, RationalsAndPolynomials) {
  EXPECT_EQ(rational_to_json(frac(-3, 6)), "-1/2");
  EXPECT_EQ(rational_from_json(json("4/6")), frac(2, 3));
  EXPECT_EQ(rational_from_json(json(7)), Rational(7));
  EXPECT_THROW(rational_from_json(json(0.5)), ParseError);
  const RatPoly p(std::vector<Rational>{frac(1, 3), 0, -2});
  EXPECT_EQ(poly_to_json(p).dump(), R"({"coeffs":["1/3","0","-2"]})");
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  EXPECT_THROW(poly_from_json(json::parse(R"({"c": []})")), ParseError);
}

TEST(Json, Graphs) {
  EXPECT_EQ(graph_to_json(c3).dump(), R"({"edges":[[0,1],[1,2],[2,0]],"n":3})");
  const auto g = graph_from_json(graph_to_json(c3));
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(2).head, 2);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": 2, "edges": [[0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"edges": []})")), ParseError);
  const auto t = graph_from_text("3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(t.edge_count(), 3u);
  EXPECT_THROW(graph_from_text("3\n0 1\n1"), ParseError);
  EXPECT_THROW(graph_from_text("3\n0 x"), ParseError);
}

TEST(Json, GroupElementsRoundTrip) {
  for (const char* desc : {"std:3", "cyclic:4", "gm1d:3,2"}) {
    const LiftGroup lg = make_lift_group(desc);
    for (std::size_t id = 0; id < lg.pi.group->size(); ++id)
      EXPECT_EQ(element_from_json(lg, element_to_json(lg, static_cast<int>(id))), static_cast<int>(id)) << desc;
  }
  EXPECT_EQ(element_to_json(make_lift_group("std:3"), 1).dump(), "[0,2,1]");
  EXPECT_THROW(element_from_json(make_lift_group("cyclic:3"), json(3)), ParseError);
  EXPECT_THROW(element_from_json(make_lift_group("std:3"), json::parse("[0,1]")), ParseError);
}

TEST(Certificate, RoundTripAndTamperDetection) {
  for (const auto& [g, group] : std::vector<std::pair<OrientedMultigraph, std::string>>{
           {c3, "std:3"}, {c3, "cyclic:3"}, {OrientedMultigraph(2, {{0, 1}, {0, 1}, {0, 1}}), "gm1d:2,2"}}) {
    const LiftCertificate cert = find_lift_group(g, make_lift_group(group));
    const json j = certificate_to_json(cert, default_tolerance());
    EXPECT_EQ(verify_certificate(j), j) << group;
    EXPECT_EQ(verify_certificate(json::parse(j.dump())).dump(), j.dump());

    json bad_poly = j;
    bad_poly["new_poly"]["coeffs"][0] = "12345";
    EXPECT_THROW(verify_certificate(bad_poly), VerificationMismatch);
    json bad_verdict = j;
    bad_verdict["verdict"] = "fail";
    EXPECT_THROW(verify_certificate(bad_verdict), VerificationMismatch);
    json extra = j;
    extra["note"] = "x";
    EXPECT_THROW(verify_certificate(extra), VerificationMismatch);
  }
}

TEST(Certificate, ChangedLabelIsDetected) {
  const OrientedMultigraph g(2, {{0, 1}, {0, 1}, {0, 1}});
  const LiftCertificate cert = find_lift(g, 2);
  json j = certificate_to_json(cert, default_tolerance());
  // flip the minority sign: the sum of signs moves from +-1 to +-3
  const auto& l = j["labels"];
  const std::size_t pick = l[0] == l[1] ? 2 : (l[0] == l[2] ? 1 : 0);
  j["labels"][pick] = j["labels"][pick] == json::parse("[0,1]") ? json::parse("[1,0]") : json::parse("[0,1]");
  EXPECT_THROW(verify_certificate(j), VerificationMismatch);
}

TEST(Certificate, MissingFieldsAreParseErrors) {
  json j = certificate_to_json(find_lift(c3, 2), default_tolerance());
  j.erase("labels");
  EXPECT_THROW(verify_certificate(j), ParseError);
}

TEST(Corpus, GenerationIsCanonicalAndDeterministic) {
  const auto a = generate_corpus(3, 3);
  const auto b = generate_corpus(3, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(graph_to_json(a[i].graph), graph_to_json(b[i].graph));
  // loops only: one bouquet per edge count
  EXPECT_EQ(std::count_if(a.begin(), a.end(), [](const NamedGraph& g) { return g.graph.vertex_count() == 1; }), 3);
  EXPECT_EQ(canonical_edges(3, {{2, 1}, {0, 2}}), canonical_edges(3, {{0, 1}, {1, 2}}));
  for (const auto& g : a) EXPECT_TRUE(g.graph.connected()) << g.name;
}

TEST(Corpus, BundledFixturesLoad) {
  const Corpus c = load_corpus(RAMLIFT_FIXTURE_DIR);
  EXPECT_EQ(c.generated.size(), generate_corpus().size());
  EXPECT_EQ(c.fixture("K4-minus-edge").edge_count(), 5u);
  EXPECT_EQ(c.fixture("subdivided-cube").vertex_count(), 20);
  EXPECT_THROW(c.fixture("nope"), MissingFixtures);
}

TEST(Corpus, EmptyDirectoryIsMissingFixtures) {
  const auto dir = std::filesystem::temp_directory_path() / "ramlift-empty-fixtures";
  std::filesystem::create_directories(dir);
  EXPECT_THROW(load_corpus(dir.string()), MissingFixtures);
  EXPECT_THROW(load_corpus((dir / "absent").string()), MissingFixtures);
  std::filesystem::remove_all(dir);
}
