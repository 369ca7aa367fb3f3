#pragma once

#include <cstddef>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "ramlift/errors.hpp"

namespace ramlift {

/// One stored edge e in E+; the reverse -e is implicit.
struct Edge {
  int head = 0;
  int tail = 0;
  bool is_loop() const { return head == tail; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge index together with a traversal direction. Forward runs
/// head -> tail; the reverse runs tail -> head.
struct OrientedEdge {
  std::size_t index = 0;
  bool forward = true;

  OrientedEdge reversed() const { return {index, !forward}; }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

/// Finite undirected multigraph with loops, on vertices 0..n-1. Edges are
/// addressed by their position in the edge list.
class OrientedMultigraph {
 public:
  OrientedMultigraph() = default;
  OrientedMultigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError("graph: negative vertex count");
    for (const auto& e : edges_)
      if (e.head < 0 || e.head >= n_ || e.tail < 0 || e.tail >= n_)
        throw PreconditionError("graph: edge endpoint out of range");
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t j) const { return edges_.at(j); }

  int source(OrientedEdge e) const { return e.forward ? edges_[e.index].head : edges_[e.index].tail; }
  int target(OrientedEdge e) const { return e.forward ? edges_[e.index].tail : edges_[e.index].head; }

  /// Degree with loops counted twice.
  int degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.head == v) + (e.tail == v);
    return d;
  }

  int max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
  }

  bool has_loops() const {
    for (const auto& e : edges_)
      if (e.is_loop()) return true;
    return false;
  }

  /// Oriented edges leaving v, by edge index; a loop contributes both
  /// orientations.
  std::vector<OrientedEdge> outgoing(int v) const {
    std::vector<OrientedEdge> out;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (edges_[j].head == v) out.push_back({j, true});
      if (edges_[j].tail == v) out.push_back({j, false});
    }
    return out;
  }

  bool connected() const {
    if (n_ == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& e : outgoing(v)) {
        const int w = target(e);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  /// Two-colouring if bipartite (loops make a graph non-bipartite).
  std::optional<std::vector<int>> two_coloring() const {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    for (int s = 0; s < n_; ++s) {
      if (color[static_cast<std::size_t>(s)] != -1) continue;
      color[static_cast<std::size_t>(s)] = 0;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (const auto& e : outgoing(v)) {
          const int w = target(e);
          auto& cw = color[static_cast<std::size_t>(w)];
          if (cw == -1) {
            cw = 1 - color[static_cast<std::size_t>(v)];
            q.push(w);
          } else if (cw == color[static_cast<std::size_t>(v)]) {
            return std::nullopt;
          }
        }
      }
    }
    return color;
  }

  friend bool operator==(const OrientedMultigraph&, const OrientedMultigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct GraphReport {
  bool connected = false;
  bool bipartite = false;
  std::optional<int> regular_degree;
  std::optional<std::pair<int, int>> biregular_degrees;
  bool has_loops = false;
  int max_degree = 0;
};

inline GraphReport classify(const OrientedMultigraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("classify: empty graph");
  GraphReport r;
  r.connected = g.connected();
  r.has_loops = g.has_loops();
  r.max_degree = g.max_degree();
  const int d0 = g.degree(0);
  bool regular = true;
  for (int v = 1; v < g.vertex_count(); ++v) regular = regular && g.degree(v) == d0;
  if (regular) r.regular_degree = d0;
  const auto coloring = g.two_coloring();
  r.bipartite = coloring.has_value();
  if (coloring) {
    std::optional<int> side[2];
    bool ok = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      auto& s = side[(*coloring)[static_cast<std::size_t>(v)]];
      if (!s) s = g.degree(v);
      else if (*s != g.degree(v)) ok = false;
    }
    // a biregular graph needs both sides populated
    if (ok && side[0] && side[1]) r.biregular_degrees = std::pair{*side[0], *side[1]};
  }
  return r;
}

/// Inserts a midpoint n + j on every edge j. Edge 2j runs midpoint -> head(j)
/// and edge 2j + 1 runs midpoint -> tail(j).
inline OrientedMultigraph subdivide(const OrientedMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const int mid = n + static_cast<int>(j);
    edges.push_back({mid, g.edge(j).head});
    edges.push_back({mid, g.edge(j).tail});
  }
  return OrientedMultigraph(n + static_cast<int>(g.edge_count()), std::move(edges));
}

/// BFS spanning tree from vertex 0, scanning incident edges in index order.
/// Returns, per edge, whether it is a tree edge; the discovery order of
/// vertices together with the edge that discovered each is in `order`.
struct SpanningTree {
  std::vector<bool> tree_edge;
  /// (vertex, discovering oriented edge leaving the already-known endpoint)
  std::vector<std::pair<int, OrientedEdge>> order;
};

inline SpanningTree bfs_spanning_tree(const OrientedMultigraph& g) {
  if (!g.connected()) throw PreconditionError("spanning tree: graph is disconnected");
  SpanningTree t;
  t.tree_edge.assign(g.edge_count(), false);
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& e : g.outgoing(v)) {
      const int w = g.target(e);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      t.tree_edge[e.index] = true;
      t.order.emplace_back(w, e);
      q.push(w);
    }
  }
  return t;
}

/// Conjugates a group labeling by vertex potentials so that every edge of
/// the canonical BFS spanning tree carries the identity. With potentials p,
/// the new label of e is p(head)^-1 * label(e) * p(tail); the twisted
/// adjacency spectrum is unchanged for every representation.
template <class E, class Mul, class Inv>
std::vector<E> spanning_tree_normalize(const OrientedMultigraph& g, const std::vector<E>& labels, const E& identity,
                                       Mul&& mul, Inv&& inv) {
  if (labels.size() != g.edge_count()) throw PreconditionError("normalize: labeling size differs from edge count");
  const SpanningTree tree = bfs_spanning_tree(g);
  std::vector<E> potential(static_cast<std::size_t>(g.vertex_count()), identity);
  for (const auto& [w, e] : tree.order) {
    const E& label = labels[e.index];
    const int known = g.source(e);
    const E& pk = potential[static_cast<std::size_t>(known)];
    // forward: known = head, w = tail, need p(w) = label^-1 p(head)
    // reverse: known = tail, w = head, need p(w) = label p(tail)
    potential[static_cast<std::size_t>(w)] = e.forward ? mul(inv(label), pk) : mul(label, pk);
  }
  std::vector<E> out;
  out.reserve(labels.size());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    out.push_back(mul(mul(inv(potential[static_cast<std::size_t>(e.head)]), labels[j]),
                      potential[static_cast<std::size_t>(e.tail)]));
  }
  return out;
}

}  // namespace ramlift
