#include "cosec/reduce.hpp"

#include <string>

#include "cosec/approx.hpp"
#include "cosec/errors.hpp"
#include "cosec/exact.hpp"
#include "cosec/verify.hpp"

namespace cosec {

namespace {

void require_no_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) throw PreconditionError("vertex " + std::to_string(v) + " is isolated");
}

void require_csds(const Graph& reduced, const VertexSet& s) {
  if (s.universe() != reduced.n())
    throw InputError("solution universe " + std::to_string(s.universe()) + " does not match reduced graph order " +
                     std::to_string(reduced.n()));
  const Certificate c = is_csds(reduced, s);
  if (!c.verdict)
    throw PreconditionError("set " + s.to_string() + " is not a CSDS of the reduced graph (" +
                            std::string(to_string(c.reason)) + " at " + c.failing.to_string() + ")");
}

// Cross-pair test shared by is_bisimplicial and check_peo.
bool cross_complete(const Graph& g, const VertexSet& alive, Vertex u, Vertex v) {
  const VertexSet nu = g.open_neighborhood(u) & alive;
  const VertexSet nv = g.open_neighborhood(v) & alive;
  for (Vertex a : nv)
    for (Vertex b : nu)
      if (a == b || !g.adjacent(a, b)) return false;
  return true;
}

VertexSet checked_trace(const Graph& g, const VertexSet& normalized, std::size_t original_size, std::size_t offset,
                        const char* construction) {
  VertexSet d(g.n());
  for (Vertex v : normalized)
    if (v < g.n()) d.insert(v);
  const Certificate dom = is_dominating(g, d);
  if (!dom.verdict)
    throw ClaimViolation(std::string(construction) + " extraction produced " + d.to_string() +
                         ", which leaves " + dom.failing.to_string() + " undominated");
  if (d.size() + offset > original_size)
    throw ClaimViolation(std::string(construction) + " extraction produced " + d.to_string() + " from a CSDS of size " +
                         std::to_string(original_size) + "; expected at most |S| - " + std::to_string(offset));
  return d;
}

}  // namespace

VertexSet ScbMap::reduced_x() const {
  VertexSet out(reduced_n());
  for (Vertex v : base_x) out.insert(v);
  out.insert(x);
  out.insert(x0);
  return out;
}

PebgReduction build_pebg(const Graph& g) {
  require_no_isolated(g);
  const std::size_t n = g.n();
  PebgMap map;
  map.base_n = n;
  for (std::size_t i = 0; i < n; ++i) map.a.push_back(static_cast<Vertex>(n + i));
  const Vertex base = static_cast<Vertex>(2 * n);
  map.s = base;
  map.t = base + 1;
  map.x = base + 2;
  map.y = base + 3;
  map.w = base + 4;
  map.z = base + 5;

  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = static_cast<Vertex>(i);
    edges.emplace_back(v, map.a[i]);
    edges.emplace_back(v, map.s);
    edges.emplace_back(map.a[i], map.x);
    edges.emplace_back(map.a[i], map.z);
  }
  edges.emplace_back(map.s, map.t);
  edges.emplace_back(map.x, map.y);
  edges.emplace_back(map.z, map.w);

  map.peo = {{map.s, map.t}, {map.x, map.y}, {map.z, map.w}};
  for (std::size_t i = 0; i < n; ++i) map.peo.emplace_back(static_cast<Vertex>(i), map.a[i]);
  return {Graph(map.reduced_n(), edges), std::move(map)};
}

VertexSet extract_dom_pebg(const PebgMap& map, const Graph& g, const Graph& reduced, const VertexSet& s) {
  if (g.n() != map.base_n || reduced.n() != map.reduced_n())
    throw InputError("graphs do not match the perfect-elimination reduction map");
  require_csds(reduced, s);
  VertexSet norm = s;
  auto swap_in = [&](Vertex from, Vertex to) {
    if (norm.contains(from)) {
      norm.erase(from);
      norm.insert(to);
    }
  };
  swap_in(map.y, map.x);
  swap_in(map.t, map.s);
  swap_in(map.w, map.z);
  for (std::size_t i = 0; i < map.base_n; ++i) swap_in(map.a[i], map.base_vertex(i));
  return checked_trace(g, norm, s.size(), 3, "perfect-elimination");
}

StarReduction build_star_convex(const Graph& g) {
  require_no_isolated(g);
  const auto sides = bipartition(g);
  if (!sides) throw InputError("star-convex construction needs a bipartite graph");
  const std::size_t n = g.n();
  ScbMap map;
  map.base_n = n;
  map.base_x = sides->x;
  map.base_y = sides->y;
  map.x0 = static_cast<Vertex>(n);
  map.x = static_cast<Vertex>(n + 1);
  map.y0 = static_cast<Vertex>(n + 2);
  map.y = static_cast<Vertex>(n + 3);
  map.center = map.x;

  std::vector<Edge> edges = g.edges();
  for (Vertex v : sides->x) edges.emplace_back(v, map.y);
  for (Vertex v : sides->y) edges.emplace_back(v, map.x);
  edges.emplace_back(map.x0, map.y);
  edges.emplace_back(map.x, map.y);
  edges.emplace_back(map.x, map.y0);
  return {Graph(map.reduced_n(), edges), std::move(map)};
}

VertexSet extract_dom_star(const ScbMap& map, const Graph& g, const Graph& reduced, const VertexSet& s) {
  if (g.n() != map.base_n || reduced.n() != map.reduced_n())
    throw InputError("graphs do not match the star-convex reduction map");
  require_csds(reduced, s);
  VertexSet norm = s;
  if (!norm.contains(map.x)) {
    norm.erase(map.y0);
    norm.insert(map.x);
  }
  if (!norm.contains(map.y)) {
    norm.erase(map.x0);
    norm.insert(map.y);
  }
  return checked_trace(g, norm, s.size(), 2, "star-convex");
}

bool is_bisimplicial(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.n() || v >= g.n() || !g.adjacent(u, v))
    throw InputError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  if (!bipartition(g)) throw InputError("bi-simplicial test needs a bipartite graph");
  return cross_complete(g, g.all_vertices(), u, v);
}

bool check_peo(const Graph& g, const std::vector<Edge>& order) {
  VertexSet used(g.n());
  for (const auto& [u, v] : order) {
    if (u >= g.n() || v >= g.n() || !g.adjacent(u, v))
      throw InputError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    if (used.contains(u) || used.contains(v))
      throw InputError("ordering edges (" + std::to_string(u) + "," + std::to_string(v) + ") shares an endpoint");
    used.insert(u);
    used.insert(v);
  }
  GraphView residual(g);
  for (const auto& [u, v] : order) {
    if (!cross_complete(g, residual.alive(), u, v)) return false;
    residual.remove(VertexSet(g.n(), {u, v}));
  }
  return !residual.has_edge();
}

VertexSet star_centers(const Graph& g, const VertexSet& x_side) {
  if (x_side.universe() != g.n()) throw InputError("side set does not match the graph");
  for (const auto& [u, v] : g.edges())
    if (x_side.contains(u) == x_side.contains(v))
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") lies inside one side");
  VertexSet candidates = x_side;
  for (Vertex y = 0; y < g.n(); ++y) {
    if (x_side.contains(y) || g.degree(y) <= 1) continue;
    candidates &= g.open_neighborhood(y);
  }
  return candidates;
}

std::optional<Vertex> check_star_convex(const Graph& g, const VertexSet& x_side) {
  std::optional<Vertex> best;
  for (Vertex c : star_centers(g, x_side))
    if (!best || g.degree(c) > g.degree(*best)) best = c;
  return best;
}

std::optional<Vertex> check_star_convex(const Graph& g) {
  const auto sides = bipartition(g);
  if (!sides) throw InputError("star-convexity needs a bipartite graph");
  return check_star_convex(g, sides->x);
}

std::string_view to_string(ReductionKind k) { return k == ReductionKind::Pebg ? "pebg" : "star_convex"; }

ReductionKind parse_reduction_kind(std::string_view text) {
  if (text == "pebg") return ReductionKind::Pebg;
  if (text == "star" || text == "star_convex") return ReductionKind::StarConvex;
  throw InputError("unknown reduction kind '" + std::string(text) + "'");
}

DomViaCsds approx_dom_via_csds(const Graph& g, ReductionKind kind, std::size_t threshold) {
  if (threshold == 0) throw InputError("threshold must be at least 1");
  DomViaCsds out;
  if (threshold >= 2) {
    const SolveResult small = exact_min(g, Property::Dominating, {.limit = threshold - 1});
    if (small.set) {
      out.dominating = *small.set;
      out.exact_branch = true;
      return out;
    }
  }
  if (kind == ReductionKind::Pebg) {
    const PebgReduction red = build_pebg(g);
    out.csds = *approx_csds_isolate_free(red.reduced).set;
    out.dominating = extract_dom_pebg(red.map, g, red.reduced, *out.csds);
  } else {
    const StarReduction red = build_star_convex(g);
    out.csds = *approx_csds_isolate_free(red.reduced).set;
    out.dominating = extract_dom_star(red.map, g, red.reduced, *out.csds);
  }
  return out;
}

}  // namespace cosec
