#include "cosec/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cosec/errors.hpp"

namespace cosec {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n), rows_(n, VertexSet(n)) {
  for (const auto& e : edges) {
    auto [u, v] = e;
    if (u >= n || v >= n)
      throw InputError("edge " + pair_text(e) + " has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) throw InputError("self-loop " + pair_text(e));
    if (rows_[u].contains(v)) throw InputError("duplicate edge " + pair_text(e));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
  for (Vertex v = 0; v < n; ++v) adj_[v] = rows_[v].to_vector();
  m_ = edges.size();
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = rows_.at(v);
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::restricted_to(const VertexSet& keep) const {
  std::vector<Edge> kept;
  for (const auto& [u, v] : edges())
    if (keep.contains(u) && keep.contains(v)) kept.emplace_back(u, v);
  return Graph(n(), kept);
}

Graph build_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
  return g.closed_neighborhood(v);
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.n() == 0) throw InputError("degree profile of the empty graph");
  DegreeProfile p;
  p.min_degree = g.degree(0);
  p.max_degree = g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  if (p.min_degree == p.max_degree) p.regular_degree = p.min_degree;
  return p;
}

GraphView GraphView::without(const VertexSet& x) const {
  GraphView out = *this;
  out.deleted_ |= x;
  return out;
}

std::size_t GraphView::degree(Vertex v) const { return g_->open_neighborhood(v).size() - g_->open_neighborhood(v).intersection_size(deleted_); }

bool GraphView::has_edge() const {
  for (Vertex v = 0; v < g_->n(); ++v)
    if (!deleted_.contains(v) && degree(v) > 0) return true;
  return false;
}

std::vector<Edge> GraphView::edges() const {
  std::vector<Edge> out;
  for (const auto& [u, v] : g_->edges())
    if (!deleted_.contains(u) && !deleted_.contains(v)) out.emplace_back(u, v);
  return out;
}

GraphView residual_delete(const Graph& g, const VertexSet& x) { return GraphView(g).without(x); }

GraphView residual_delete(const GraphView& view, const VertexSet& x) { return view.without(x); }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.n());
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.n());
    std::deque<Vertex> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      comp.insert(u);
      for (Vertex w : g.neighbors(u))
        if (!seen.contains(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b{VertexSet(g.n()), VertexSet(g.n())};
  for (Vertex v = 0; v < g.n(); ++v) (side[v] == 0 ? b.x : b.y).insert(v);
  return b;
}

}  // namespace cosec
