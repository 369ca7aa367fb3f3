#pragma once

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramlift/errors.hpp"
#include "ramlift/graph.hpp"
#include "ramlift/io.hpp"

namespace ramlift {

struct NamedGraph {
  std::string name;
  OrientedMultigraph graph;
};

using EdgeList = std::vector<std::pair<int, int>>;

/// Smallest sorted edge list over all vertex relabelings.
inline EdgeList canonical_edges(int n, const EdgeList& edges) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList cur;
    for (auto [a, b] : edges) {
      int x = p[static_cast<std::size_t>(a)], y = p[static_cast<std::size_t>(b)];
      cur.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(cur.begin(), cur.end());
    if (first || cur < best) best = cur;
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Every connected multigraph with 1..max_vertices vertices and
/// 1..max_edges edges, up to isomorphism, in canonical form. Ordered by
/// vertex count, edge count, then edge list.
inline std::vector<NamedGraph> generate_corpus(int max_vertices = 4, int max_edges = 5, bool loops = true) {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    EdgeList slots;
    for (int a = 0; a < n; ++a)
      for (int b = loops ? a : a + 1; b < n; ++b) slots.emplace_back(a, b);
    for (int m = 1; m <= max_edges; ++m) {
      std::set<EdgeList> seen;
      // multisets of size m from `slots`, as non-decreasing index sequences
      std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
      if (slots.empty()) continue;
      for (;;) {
        EdgeList edges;
        for (std::size_t i : idx) edges.push_back(slots[i]);
        std::vector<Edge> es;
        for (auto [a, b] : edges) es.push_back({a, b});
        if (OrientedMultigraph(n, es).connected()) seen.insert(canonical_edges(n, edges));
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == slots.size() - 1) --pos;
        if (pos < 0) break;
        const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < m; ++i) idx[static_cast<std::size_t>(i)] = v;
      }
      int k = 0;
      for (const auto& edges : seen) {
        std::vector<Edge> es;
        for (auto [a, b] : edges) es.push_back({a, b});
        out.push_back({"n" + std::to_string(n) + "-m" + std::to_string(m) + "-" + std::to_string(k++),
                       OrientedMultigraph(n, std::move(es))});
      }
    }
  }
  return out;
}

inline json corpus_to_json(const std::vector<NamedGraph>& graphs) {
  json arr = json::array();
  for (const auto& g : graphs) arr.push_back({{"name", g.name}, {"graph", graph_to_json(g.graph)}});
  return {{"graphs", arr}};
}

inline std::vector<NamedGraph> corpus_from_json(const json& j) {
  if (!j.contains("graphs") || !j["graphs"].is_array()) throw ParseError("corpus: expected {\"graphs\": [...]}");
  std::vector<NamedGraph> out;
  for (const auto& g : j["graphs"]) out.push_back({g.at("name").get<std::string>(), graph_from_json(g.at("graph"))});
  return out;
}

inline constexpr const char* kCorpusFile = "corpus.json";

struct Corpus {
  /// The exhaustive small-graph family.
  std::vector<NamedGraph> generated;
  /// Hand-picked fixtures, one per file, named by file stem.
  std::vector<NamedGraph> named;

  const OrientedMultigraph& fixture(const std::string& name) const {
    for (const auto& g : named)
      if (g.name == name) return g.graph;
    throw MissingFixtures("fixture '" + name + "' not found");
  }
};

/// Reads corpus.json and every other *.json graph in `dir`.
inline Corpus load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw MissingFixtures("fixture directory '" + dir + "' does not exist");
  Corpus c;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw MissingFixtures("fixture directory '" + dir + "' holds no .json fixtures");
  for (const auto& f : files) {
    if (f.filename() == kCorpusFile) c.generated = corpus_from_json(parse_json(read_file(f.string()), f.string()));
    else c.named.push_back({f.stem().string(), load_graph(f.string())});
  }
  if (c.generated.empty()) throw MissingFixtures("fixture directory '" + dir + "' lacks " + kCorpusFile);
  return c;
}

}  // namespace ramlift
