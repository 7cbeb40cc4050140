#include "cosec/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "cosec/errors.hpp"

namespace cosec {

namespace {

constexpr std::size_t kMaxOrder = 16;

struct Small {
  std::uint8_t n = 0;
  std::array<std::uint16_t, kMaxOrder> adj{};
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Colours = std::array<std::uint64_t, kMaxOrder>;

// Colour refinement seeded with (degree, triangles through v). Colours are
// isomorphism invariant, so they can be compared across graphs.
Colours refine(const Small& g) {
  Colours c{};
  for (int v = 0; v < g.n; ++v) {
    int triangles = 0;
    for (std::uint16_t r = g.adj[v]; r; r &= r - 1) triangles += std::popcount<std::uint16_t>(g.adj[std::countr_zero(r)] & g.adj[v]);
    c[v] = mix((static_cast<std::uint64_t>(std::popcount(g.adj[v])) << 32) | static_cast<std::uint64_t>(triangles));
  }
  for (int round = 0; round < g.n; ++round) {
    Colours next{};
    for (int v = 0; v < g.n; ++v) {
      std::uint64_t acc = 0;
      for (std::uint16_t r = g.adj[v]; r; r &= r - 1) acc += mix(c[std::countr_zero(r)] ^ 0x5bd1e995ULL);
      next[v] = mix(c[v] * 31 + acc);
    }
    c = next;
  }
  return c;
}

std::uint64_t invariant(const Small& g, const Colours& c) {
  std::array<std::uint64_t, kMaxOrder> sorted{};
  std::copy(c.begin(), c.begin() + g.n, sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + g.n);
  std::uint64_t h = mix(g.n);
  for (int i = 0; i < g.n; ++i) h = mix(h ^ sorted[i]);
  return h;
}

bool isomorphic(const Small& a, const Colours& ca, const Small& b, const Colours& cb) {
  if (a.n != b.n) return false;
  const int n = a.n;
  // order a's vertices: rarest colour first, then most connected to the prefix
  std::array<int, kMaxOrder> order{};
  std::uint16_t placed = 0;
  for (int i = 0; i < n; ++i) {
    int best = -1;
    long best_key = 0;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1) continue;
      int same = 0;
      for (int w = 0; w < n; ++w) same += ca[w] == ca[v];
      const long key = static_cast<long>(std::popcount<std::uint16_t>(a.adj[v] & placed)) * 64 - same;
      if (best < 0 || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    order[i] = best;
    placed |= static_cast<std::uint16_t>(1u << best);
  }
  std::array<int, kMaxOrder> image{};
  std::uint16_t used = 0;
  auto extend = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    for (int h = 0; h < n; ++h) {
      if (((used >> h) & 1) || cb[h] != ca[v]) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) ok = (((a.adj[v] >> order[j]) & 1) == ((b.adj[h] >> image[order[j]]) & 1));
      if (!ok) continue;
      image[v] = h;
      used |= static_cast<std::uint16_t>(1u << h);
      if (self(self, depth + 1)) return true;
      used &= static_cast<std::uint16_t>(~(1u << h));
    }
    return false;
  };
  return extend(extend, 0);
}

Small to_small(const Graph& g) {
  if (g.n() > kMaxOrder) throw PreconditionError("isomorphism routines support at most 16 vertices");
  Small s;
  s.n = static_cast<std::uint8_t>(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex w : g.neighbors(v)) s.adj[v] |= static_cast<std::uint16_t>(1u << w);
  return s;
}

Graph to_graph(const Small& s) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < s.n; ++u)
    for (Vertex v = u + 1; v < s.n; ++v)
      if ((s.adj[u] >> v) & 1) edges.emplace_back(u, v);
  return Graph(s.n, edges);
}

struct Entry {
  Small graph;
  Colours colours;
};

std::vector<Small> extend_level(const std::vector<Small>& previous, std::size_t max_degree) {
  std::vector<Entry> found;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (const Small& base : previous) {
    const int old_n = base.n;
    std::uint16_t eligible = 0;
    for (int v = 0; v < old_n; ++v)
      if (static_cast<std::size_t>(std::popcount(base.adj[v])) < max_degree) eligible |= static_cast<std::uint16_t>(1u << v);
    // every subset of eligible vertices with at most max_degree members
    for (std::uint32_t sub = eligible;; sub = (sub - 1) & eligible) {
      if (static_cast<std::size_t>(std::popcount(sub)) <= max_degree) {
        Small child = base;
        child.n = static_cast<std::uint8_t>(old_n + 1);
        child.adj[old_n] = static_cast<std::uint16_t>(sub);
        for (std::uint32_t r = sub; r; r &= r - 1) child.adj[std::countr_zero(r)] |= static_cast<std::uint16_t>(1u << old_n);
        const Colours c = refine(child);
        auto& bucket = buckets[invariant(child, c)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t idx) {
          return isomorphic(found[idx].graph, found[idx].colours, child, c);
        });
        if (!seen) {
          bucket.push_back(found.size());
          found.push_back({child, c});
        }
      }
      if (sub == 0) break;
    }
  }
  std::vector<Small> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(e.graph);
  return out;
}

std::vector<Small> small_level(std::size_t n, std::size_t max_degree) {
  if (n > kMaxOrder) throw PreconditionError("graph enumeration supports at most 16 vertices");
  std::vector<Small> level{Small{}};
  for (std::size_t k = 1; k <= n; ++k) level = extend_level(level, max_degree);
  return level;
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t max_degree) {
  std::vector<Graph> out;
  for (const Small& s : small_level(n, max_degree)) out.push_back(to_graph(s));
  return out;
}

std::vector<Graph> enumerate_graphs(std::size_t n_min, std::size_t n_max, std::size_t max_degree,
                                    const std::function<bool(const Graph&)>& keep) {
  std::vector<Graph> out;
  if (n_max > kMaxOrder) throw PreconditionError("graph enumeration supports at most 16 vertices");
  std::vector<Small> level{Small{}};
  for (std::size_t k = 1; k <= n_max; ++k) {
    level = extend_level(level, max_degree);
    if (k < n_min) continue;
    for (const Small& s : level) {
      Graph g = to_graph(s);
      if (keep(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  const Small sa = to_small(a);
  const Small sb = to_small(b);
  const Colours ca = refine(sa);
  const Colours cb = refine(sb);
  if (invariant(sa, ca) != invariant(sb, cb)) return false;
  return isomorphic(sa, ca, sb, cb);
}

bool is_connected(const Graph& g) { return g.n() > 0 && connected_components(g).size() == 1; }

}  // namespace cosec
