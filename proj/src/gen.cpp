#include "cosec/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "cosec/errors.hpp"

namespace cosec {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::CompleteMultipartite: return "complete_multipartite";
    case Family::Wheel: return "wheel";
    case Family::Star: return "star";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::CompleteBipartite,
                   Family::CompleteMultipartite, Family::Wheel, Family::Star})
    if (text == to_string(f)) return f;
  throw InputError("unknown family '" + std::string(text) + "'");
}

namespace {

Graph multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < parts.size(); ++b) block_of.insert(block_of.end(), parts[b], b);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < block_of.size(); ++u)
    for (Vertex v = u + 1; v < block_of.size(); ++v)
      if (block_of[u] != block_of[v]) edges.emplace_back(u, v);
  return Graph(block_of.size(), edges);
}

// Unbiased draw from [0, bound) on raw engine output.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

bool coin(std::mt19937_64& rng, double p) {
  // 53 random bits mapped to [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

Graph gen_family(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path:
      if (n < 1) throw InputError("path needs n >= 1");
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph(n, edges);
    case Family::Cycle:
      if (n < 3) throw InputError("cycle needs n >= 3");
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, static_cast<Vertex>(n - 1));
      return Graph(n, edges);
    case Family::Complete:
      if (n < 1) throw InputError("complete graph needs n >= 1");
      return multipartite(std::vector<std::size_t>(n, 1));
    case Family::CompleteBipartite:
      if (spec.parts.size() != 2 || spec.parts[0] == 0 || spec.parts[1] == 0)
        throw InputError("complete_bipartite needs two positive part sizes");
      return multipartite(spec.parts);
    case Family::CompleteMultipartite:
      if (spec.parts.size() < 2 || std::count(spec.parts.begin(), spec.parts.end(), 0u) > 0)
        throw InputError("complete_multipartite needs at least two positive part sizes");
      return multipartite(spec.parts);
    case Family::Wheel: {
      if (n < 4) throw InputError("wheel needs n >= 4");
      const Vertex hub = static_cast<Vertex>(n - 1);
      for (Vertex v = 0; v < hub; ++v) {
        edges.emplace_back(v, (v + 1) % hub);
        edges.emplace_back(v, hub);
      }
      return Graph(n, edges);
    }
    case Family::Star:
      if (n < 2) throw InputError("star needs n >= 2");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      return Graph(n, edges);
  }
  throw InputError("unknown family");
}

Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t max_attempts) {
  if ((n * d) % 2 != 0) throw InputError("n*d must be even for a " + std::to_string(d) + "-regular graph");
  if (d >= n) throw InputError("degree must be smaller than n");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[draw_below(rng, i)]);
    std::vector<Edge> edges;
    VertexSet seen_pairs(n * n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex u = std::min(points[i], points[i + 1]);
      Vertex v = std::max(points[i], points[i + 1]);
      if (u == v || seen_pairs.contains(static_cast<Vertex>(u * n + v))) simple = false;
      else {
        seen_pairs.insert(static_cast<Vertex>(u * n + v));
        edges.emplace_back(u, v);
      }
    }
    if (simple) {
      std::sort(edges.begin(), edges.end());
      return Graph(n, edges);
    }
  }
  throw InputError("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices after " +
                   std::to_string(max_attempts) + " attempts");
}

Graph gen_random_min_degree2(std::size_t n, double p, std::uint64_t seed) {
  if (n < 3) throw InputError("minimum-degree-2 generator needs n >= 3");
  if (!(p > 0.0 && p < 1.0)) throw InputError("edge probability must lie in (0, 1)");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::size_t> deg(n, 0);
  auto add = [&](std::size_t u, std::size_t v) {
    adj[u][v] = adj[v][u] = true;
    ++deg[u];
    ++deg[v];
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng, p)) add(u, v);

  for (std::size_t v = 0; v < n; ++v) {
    // nearest by |id difference|, lower id first on ties
    for (std::size_t dist = 1; deg[v] < 2 && dist < n; ++dist) {
      if (v >= dist && !adj[v][v - dist]) add(v, v - dist);
      if (deg[v] < 2 && v + dist < n && !adj[v][v + dist]) add(v, v + dist);
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adj[u][v]) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.n()) throw InputError("permutation size does not match graph order");
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  std::sort(edges.begin(), edges.end());
  return Graph(g.n(), edges);
}

}  // namespace cosec
