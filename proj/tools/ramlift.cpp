#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ramlift/acceptance.hpp"
#include "ramlift/corpus.hpp"
#include "ramlift/io.hpp"
#include "ramlift/matching.hpp"
#include "ramlift/repgroup.hpp"
#include "ramlift/rho.hpp"
#include "ramlift/search.hpp"

#ifndef RAMLIFT_FIXTURE_DIR
#define RAMLIFT_FIXTURE_DIR "fixtures"
#endif

using namespace ramlift;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerdict = 2;

struct Config {
  std::string graph_path;
  std::string output;
  int r = 0;
  int d = 0;
  std::string group;
  std::string factorization = "exact";
  bool oracle = false;
  std::optional<double> cap;
  std::optional<std::string> tol;
  std::string property;
  std::string fixtures = RAMLIFT_FIXTURE_DIR;
  std::optional<std::string> only;
  bool write_corpus = false;
};

double resolve_cap(const Config& c) {
  double cap = kDefaultEnumerationCap;
  if (const char* env = std::getenv("RAMLIFT_CAP")) {
    try {
      cap = std::stod(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("RAMLIFT_CAP: not a number: ") + env);
    }
  }
  if (c.cap) cap = *c.cap;
  if (!(cap >= 1)) throw ParseError("cap must be a positive integer");
  return cap;
}

Rational resolve_tol(const Config& c) {
  Rational tol = default_tolerance();
  if (const char* env = std::getenv("RAMLIFT_TOL")) tol = parse_rational(env);
  if (c.tol) tol = parse_rational(*c.tol);
  if (tol <= 0) throw ParseError("tol must be a positive rational");
  return tol;
}

SearchOptions resolve_options(const Config& c) { return {resolve_cap(c), resolve_tol(c)}; }

void emit(const Config& c, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw PreconditionError("cannot write '" + c.output + "'");
  out << text;
}

json report_json(const GraphReport& r) {
  json j{{"connected", r.connected}, {"bipartite", r.bipartite}, {"has_loops", r.has_loops}, {"max_degree", r.max_degree}};
  j["regular_degree"] = r.regular_degree ? json(*r.regular_degree) : json(nullptr);
  j["biregular_degrees"] =
      r.biregular_degrees ? json::array({r.biregular_degrees->first, r.biregular_degrees->second}) : json(nullptr);
  return j;
}

int cmd_info(const Config& c) {
  const auto g = load_graph(c.graph_path);
  json j{{"graph", graph_to_json(g)},
         {"vertices", g.vertex_count()},
         {"edges", g.edge_count()},
         {"report", report_json(classify(g))},
         {"char_poly", poly_to_json(char_poly(g))},
         {"matching_poly", poly_to_json(matching_poly(g))}};
  emit(c, j);
  return kExitOk;
}

int cmd_matching(const Config& c) {
  const auto g = load_graph(c.graph_path);
  const RatPoly p = c.oracle ? d_matching_poly_oracle(g, c.d, resolve_cap(c)) : d_matching_poly(g, c.d);
  emit(c, poly_to_json(p));
  return kExitOk;
}

int cmd_lift(const Config& c) {
  const auto g = load_graph(c.graph_path);
  const SearchOptions opt = resolve_options(c);
  LiftCertificate cert;
  if (!c.group.empty()) {
    cert = find_lift_group(g, make_lift_group(c.group), c.factorization, opt);
  } else {
    if (c.r < 2) throw PreconditionError("lift: give --r >= 2 or --group");
    cert = g.has_loops() ? lift_regular_with_loops(g, c.r, opt) : find_lift(g, c.r, opt);
  }
  emit(c, certificate_to_json(cert, opt.tol));
  return cert.verdict == kVerdictFail ? kExitVerdict : kExitOk;
}

int cmd_rho(const Config& c) {
  emit(c, rho_to_json(rho(load_graph(c.graph_path))));
  return kExitOk;
}

int cmd_check(const Config& c) {
  const Representation pi = representation_from_descriptor(c.group);
  json j{{"group", c.group}, {"property", c.property}, {"order", pi.group->size()}, {"dim", pi.dim}};
  bool pass = false;
  if (c.property == "p1") {
    const P1Report rep = check_p1(pi);
    json powers = json::array();
    for (std::size_t m = 0; m < rep.norms.size(); ++m)
      powers.push_back({{"m", m}, {"norm", rep.norms[m]}, {"irreducible", rep.norms[m] == 1}});
    json coll = json::array();
    for (auto [a, b] : rep.collisions) coll.push_back({a, b});
    j["exterior_powers"] = powers;
    j["isomorphic_pairs"] = coll;
    pass = rep.pass;
  } else {
    const P2Report rep = check_p2(pi);
    j["image_order"] = rep.image_order;
    j["pseudo_reflections"] = rep.reflection_count;
    j["generated_order"] = rep.generated_order;
    pass = rep.pass;
  }
  j["pass"] = pass;
  emit(c, j);
  return kExitOk;
}

int cmd_expected(const Config& c) {
  const auto g = load_graph(c.graph_path);
  const LiftGroup lg = make_lift_group(c.group.empty() ? "std:" + std::to_string(c.r) : c.group);
  const auto ef = edge_factorization(lg, c.factorization);
  std::vector<std::vector<FactorDistribution<int>>> factors(g.edge_count(), ef.factors);
  const SearchState s = make_search_state(g, lg.pi, std::move(factors));
  CharPolyCache cache;
  const RatPoly p = expected_char_poly(s, cache, resolve_cap(c));
  json j{{"group", lg.descriptor}, {"expected_char_poly", poly_to_json(p)}, {"epsilon", rational_to_json(ef.epsilon)}};
  if (lg.kind == LiftGroup::Kind::Symmetric) {
    const RatPoly m = d_matching_poly(g, lg.d);
    j["matching_poly"] = poly_to_json(m);
    j["equals_matching_poly"] = p == m;
  }
  emit(c, j);
  return kExitOk;
}

int cmd_verify(const Config& c) {
  const json claimed = parse_json(read_file(c.graph_path), c.graph_path);
  const json fresh = verify_certificate(claimed);
  emit(c, {{"verified", true}, {"verdict", fresh["verdict"]}});
  return fresh["verdict"] == kVerdictFail ? kExitVerdict : kExitOk;
}

int cmd_corpus(const Config& c) {
  if (c.write_corpus) {
    std::filesystem::create_directories(c.fixtures);
    const std::string path = c.fixtures + "/" + kCorpusFile;
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write '" + path + "'");
    out << corpus_to_json(generate_corpus()).dump(1) << "\n";
    emit(c, {{"written", path}});
    return kExitOk;
  }
  const Corpus corpus = load_corpus(c.fixtures);
  const auto results = run_acceptance(corpus, c.only);
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    all = all && r.pass;
  }
  emit(c, {{"graphs", corpus.generated.size()}, {"fixtures", corpus.named.size()}, {"criteria", arr}, {"pass", all}});
  return all ? kExitOk : kExitVerdict;
}

void add_graph(CLI::App* sub, Config& c) { sub->add_option("graph", c.graph_path, "graph file (JSON or flat text)")->required(); }

void add_limits(CLI::App* sub, Config& c) {
  sub->add_option("--cap", c.cap, "enumeration cap (env RAMLIFT_CAP)");
  sub->add_option("--tol", c.tol, "root bracket width, a rational (env RAMLIFT_TOL)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ramanujan coverings of multigraphs"};
  app.require_subcommand(1);
  Config c;
  app.add_option("-o,--output", c.output, "write JSON here instead of standard output");

  auto* info = app.add_subcommand("info", "graph summary");
  add_graph(info, c);

  auto* matching = app.add_subcommand("matching", "d-matching polynomial");
  matching->add_option("--d", c.d, "covering degree")->required()->check(CLI::PositiveNumber);
  matching->add_flag("--oracle", c.oracle, "average over all d-coverings instead");
  matching->add_option("--cap", c.cap, "enumeration cap (env RAMLIFT_CAP)");
  add_graph(matching, c);

  auto* lift = app.add_subcommand("lift", "greedy one-sided Ramanujan covering");
  lift->add_option("--r", c.r, "covering degree");
  lift->add_option("--group", c.group, "cyclic:m, gm1d:m,d or std:r");
  lift->add_option("--factorization", c.factorization, "exact or lazy:<steps>");
  add_limits(lift, c);
  add_graph(lift, c);

  auto* rho_cmd = app.add_subcommand("rho", "spectral radius bracket of the universal cover");
  add_graph(rho_cmd, c);

  auto* check = app.add_subcommand("check", "representation properties P1 and P2");
  check->add_option("property", c.property, "p1 or p2")->required()->check(CLI::IsMember({"p1", "p2"}));
  check->add_option("--group", c.group, "std:r, cyclic:m, gm1d:m,d, perm:r, sign:r or triv:r")->required();

  auto* expected = app.add_subcommand("expected-charpoly", "expected twisted characteristic polynomial");
  expected->add_option("--r", c.r, "symmetric degree, when no group is given");
  expected->add_option("--group", c.group, "lift group descriptor");
  expected->add_option("--factorization", c.factorization, "exact or lazy:<steps>");
  expected->add_option("--cap", c.cap, "enumeration cap (env RAMLIFT_CAP)");
  add_graph(expected, c);

  auto* verify = app.add_subcommand("verify", "recompute a certificate");
  verify->add_option("certificate", c.graph_path, "certificate JSON")->required();

  auto* corpus = app.add_subcommand("corpus", "acceptance matrix over the fixture corpus");
  corpus->add_option("--fixtures", c.fixtures, "fixture directory");
  corpus->add_option("--only", c.only, "single criterion, e.g. A1");
  corpus->add_flag("--write-corpus", c.write_corpus, "regenerate corpus.json in the fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*info) return cmd_info(c);
    if (*matching) return cmd_matching(c);
    if (*lift) return cmd_lift(c);
    if (*rho_cmd) return cmd_rho(c);
    if (*check) return cmd_check(c);
    if (*expected) return cmd_expected(c);
    if (*verify) return cmd_verify(c);
    if (*corpus) return cmd_corpus(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
