#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cosec/vertex_set.hpp"

namespace cosec {

using Edge = std::pair<Vertex, Vertex>;

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::optional<std::size_t> regular_degree;  // set iff min == max
};

struct Bipartition {
  VertexSet x;
  VertexSet y;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted ascending and mirrored by bitset rows, so
/// adjacency tests and neighborhood intersections are both cheap.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, duplicate edges (in either
  /// orientation) or out-of-range endpoints, naming the offending pair.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  /// N(v) as a set.
  const VertexSet& open_neighborhood(Vertex v) const { return rows_.at(v); }
  /// N[v] = N(v) ∪ {v}.
  VertexSet closed_neighborhood(Vertex v) const;
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Induced subgraph keeping original identifiers; vertices outside
  /// `keep` become isolated.
  Graph restricted_to(const VertexSet& keep) const;

  VertexSet empty_set() const { return VertexSet(n()); }
  VertexSet all_vertices() const { return VertexSet::full(n()); }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> rows_;
  std::size_t m_ = 0;
};

Graph build_graph(std::size_t n, const std::vector<Edge>& edges);

VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Requires n >= 1.
DegreeProfile degree_profile(const Graph& g);

/// Residual graph G - X. Holds a reference to the base graph plus the
/// deleted mask; identifiers are never renumbered.
class GraphView {
 public:
  explicit GraphView(const Graph& g) : g_(&g), deleted_(g.n()) {}

  const Graph& base() const { return *g_; }
  const VertexSet& deleted() const { return deleted_; }
  VertexSet alive() const { return deleted_.complement(); }
  bool is_alive(Vertex v) const { return v < g_->n() && !deleted_.contains(v); }

  /// Deleting X then Y equals deleting X ∪ Y.
  GraphView without(const VertexSet& x) const;
  void remove(const VertexSet& x) { deleted_ |= x; }

  /// Residual neighbors of an alive vertex.
  VertexSet neighbors(Vertex v) const { return g_->open_neighborhood(v) - deleted_; }
  std::size_t degree(Vertex v) const;
  bool has_edge() const;
  std::vector<Edge> edges() const;

 private:
  const Graph* g_;
  VertexSet deleted_;
};

GraphView residual_delete(const Graph& g, const VertexSet& x);
GraphView residual_delete(const GraphView& view, const VertexSet& x);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// 2-colouring with the lowest vertex of every component on the x side,
/// or nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

}  // namespace cosec
