#include "cosec/approx.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cosec/errors.hpp"
#include "cosec/verify.hpp"

namespace cosec {

namespace {

using Clock = std::chrono::steady_clock;

// Multicover greedy over residual requirements. Only vertices in
// `candidates` may be picked; requirement entries are consumed in place.
GreedyTrace multicover_greedy(const Graph& g, std::vector<std::size_t> need, const VertexSet& candidates) {
  GreedyTrace trace{{}, VertexSet(g.n())};
  auto gain = [&](Vertex v) {
    std::size_t total = std::min<std::size_t>(2, need[v]);
    for (Vertex u : g.neighbors(v)) total += std::min<std::size_t>(1, need[u]);
    return total;
  };
  while (std::any_of(need.begin(), need.end(), [](std::size_t r) { return r > 0; })) {
    Vertex best = static_cast<Vertex>(g.n());
    std::size_t best_gain = 0;
    for (Vertex v : candidates) {
      if (trace.final_set.contains(v)) continue;
      const std::size_t gv = gain(v);
      if (gv > best_gain) {
        best_gain = gv;
        best = v;
      }
    }
    if (best_gain == 0) throw ClaimViolation("multicover greedy stalled with unmet requirements");
    trace.picks.emplace_back(best, best_gain);
    trace.final_set.insert(best);
    need[best] = 0;
    for (Vertex u : g.neighbors(best))
      if (need[u] > 0) --need[u];
  }
  return trace;
}

void verify_csds(const Graph& g, SolveResult& r, const std::string& what) {
  const Certificate c = is_csds(g, *r.set);
  if (!c.verdict)
    r.diagnostics.push_back(what + " output " + r.set->to_string() + " is not a CSDS (" +
                            std::string(to_string(c.reason)) + " at " + c.failing.to_string() + ")");
}

void require_nonempty(const Graph& g) {
  if (g.n() == 0) throw PreconditionError("graph has no vertices");
}

}  // namespace

GreedyTrace greedy_double_dominating_trace(const Graph& g) {
  return multicover_greedy(g, std::vector<std::size_t>(g.n(), 2), g.all_vertices());
}

VertexSet greedy_double_dominating(const Graph& g) { return greedy_double_dominating_trace(g).final_set; }

SolveResult approx_csds(const Graph& g) {
  const auto start = Clock::now();
  require_nonempty(g);
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) < 2)
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                              "; approx_csds needs minimum degree 2");
  SolveResult r;
  r.problem = Property::Csds;
  r.method = Method::Greedy;
  r.set = prune_to_minimal(g, greedy_double_dominating(g), Property::DoubleDominating);
  r.cardinality = r.set->size();
  verify_csds(g, r, "approx_csds");
  r.elapsed = Clock::now() - start;
  return r;
}

SolveResult approx_csds_isolate_free(const Graph& g) {
  require_nonempty(g);
  if (degree_profile(g).min_degree >= 2) return approx_csds(g);
  const auto start = Clock::now();
  const std::size_t n = g.n();

  VertexSet fixed(n);     // forced into the solution
  VertexSet excluded(n);  // forced out
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) throw PreconditionError("vertex " + std::to_string(v) + " is isolated");
    if (g.degree(v) != 1) continue;
    const Vertex support = g.neighbors(v).front();
    if (g.degree(support) == 1) {  // K2 component
      fixed.insert(std::min(v, support));
      excluded.insert(std::max(v, support));
      continue;
    }
    std::size_t pendants = 0;
    for (Vertex w : g.neighbors(support)) pendants += g.degree(w) == 1;
    if (pendants == 1) {
      fixed.insert(support);
      excluded.insert(v);
    } else {
      fixed.insert(v);
      excluded.insert(support);
    }
  }
  const VertexSet rest = (fixed | excluded).complement();

  std::vector<std::size_t> need(n, 0);
  for (Vertex w : rest) {
    const std::size_t have = g.open_neighborhood(w).intersection_size(fixed);
    need[w] = have >= 2 ? 0 : 2 - have;
  }
  VertexSet chosen = multicover_greedy(g, need, rest).final_set;

  // every remaining vertex outside the set must keep two set neighbours
  auto rest_doubly_covered = [&](const VertexSet& s) {
    for (Vertex w : rest)
      if (!s.contains(w) && g.open_neighborhood(w).intersection_size(s) < 2) return false;
    return true;
  };
  VertexSet s = fixed | chosen;
  for (Vertex u : chosen) {
    s.erase(u);
    if (!rest_doubly_covered(s)) s.insert(u);
  }

  SolveResult r;
  r.problem = Property::Csds;
  r.method = Method::Greedy;
  r.set = s;
  r.cardinality = s.size();
  verify_csds(g, r, "approx_csds_isolate_free");
  r.elapsed = Clock::now() - start;
  return r;
}

namespace {

void require_regular(const Graph& g, std::size_t d) {
  require_nonempty(g);
  const DegreeProfile p = degree_profile(g);
  if (p.regular_degree != d)
    throw PreconditionError("graph is not " + std::to_string(d) + "-regular (degrees " +
                            std::to_string(p.min_degree) + ".." + std::to_string(p.max_degree) + ")");
}

// Shared tail of the regular-graph heuristics: S = V \ (W' ∪ T), checked
// for minimal double domination, then pruned and verified.
RegularCsds finish_regular(const Graph& g, VertexSet picked, const GraphView& residual, Method method,
                           Clock::time_point start) {
  RegularCsds out;
  out.picked = std::move(picked);
  out.leftover = residual.alive();
  out.unpruned = (out.picked | out.leftover).complement();
  SolveResult& r = out.result;
  r.problem = Property::Csds;
  r.method = method;

  const std::string tag(to_string(method));
  if (!is_double_dominating(g, out.unpruned).verdict) {
    r.diagnostics.push_back(tag + ": unpruned set " + out.unpruned.to_string() + " is not double dominating");
    r.set = approx_csds(g).set;
  } else {
    if (!is_minimal(g, out.unpruned, Property::DoubleDominating))
      r.diagnostics.push_back(tag + ": unpruned set " + out.unpruned.to_string() +
                              " is not a minimal double dominating set");
    if (!is_csds(g, out.unpruned).verdict)
      r.diagnostics.push_back(tag + ": unpruned set " + out.unpruned.to_string() + " is not a CSDS");
    r.set = prune_to_minimal(g, out.unpruned, Property::DoubleDominating);
  }
  r.cardinality = r.set->size();
  verify_csds(g, r, tag);
  r.elapsed = Clock::now() - start;
  return out;
}

}  // namespace

RegularCsds approx_csds_3reg(const Graph& g) {
  const auto start = Clock::now();
  require_regular(g, 3);
  GraphView residual(g);
  VertexSet picked(g.n());
  while (true) {
    Vertex u = static_cast<Vertex>(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
      if (residual.is_alive(v) && residual.degree(v) > 0) {
        u = v;
        break;
      }
    if (u == g.n()) break;
    const Vertex v = residual.neighbors(u).first();
    picked.insert(u);
    picked.insert(v);
    residual.remove(g.closed_neighborhood(u) | g.closed_neighborhood(v));
  }
  return finish_regular(g, std::move(picked), residual, Method::Reg3, start);
}

std::optional<PathOrCycle> find_induced_path_or_cycle(const GraphView& residual) {
  const Graph& g = residual.base();
  Vertex start = static_cast<Vertex>(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (residual.is_alive(v) && residual.degree(v) > 0) {
      start = v;
      break;
    }
  if (start == g.n()) return std::nullopt;

  std::deque<Vertex> path{start};
  VertexSet on_path(g.n(), {start});

  // lowest residual neighbour of `end` whose only path neighbour is `end`
  auto extension = [&](Vertex end) -> std::optional<Vertex> {
    for (Vertex c : residual.neighbors(end)) {
      if (on_path.contains(c)) continue;
      const VertexSet touching = g.open_neighborhood(c) & on_path;
      if (touching.size() == 1) return c;
    }
    return std::nullopt;
  };
  while (auto c = extension(path.back())) {
    path.push_back(*c);
    on_path.insert(*c);
  }
  while (auto c = extension(path.front())) {
    path.push_front(*c);
    on_path.insert(*c);
  }

  PathOrCycle out;
  out.vertices.assign(path.begin(), path.end());
  if (path.size() >= 2) {
    const VertexSet ends(g.n(), {path.front(), path.back()});
    for (Vertex w : residual.neighbors(path.back())) {
      if (on_path.contains(w)) continue;
      if ((g.open_neighborhood(w) & on_path) == ends) {
        out.vertices.push_back(w);
        out.closed = true;
        break;
      }
    }
  }
  return out;
}

RegularCsds approx_csds_4reg(const Graph& g) {
  const auto start = Clock::now();
  require_regular(g, 4);
  GraphView residual(g);
  VertexSet picked(g.n());
  while (auto found = find_induced_path_or_cycle(residual)) {
    VertexSet doomed(g.n());
    for (Vertex v : found->vertices) {
      picked.insert(v);
      doomed.insert(v);
      doomed |= residual.neighbors(v);
    }
    residual.remove(doomed);
  }
  return finish_regular(g, std::move(picked), residual, Method::Reg4, start);
}

DoubleDomConversion csds_to_double_dominating(const Graph& g, const VertexSet& s) {
  const Certificate c = is_csds(g, s);
  if (!c.verdict) throw PreconditionError("set " + s.to_string() + " is not a CSDS");
  DoubleDomConversion out;
  out.set = s;
  for (Vertex u : s) {
    if (epn(g, s, u).empty()) continue;
    out.set.insert(replacements(g, s, u).first());
  }
  while (true) {
    const Certificate dd = is_double_dominating(g, out.set);
    if (dd.verdict) break;
    out.set.insert(dd.failing.first());
    ++out.safety_net_additions;
  }
  out.within_bound = out.set.size() <= 2 * s.size();
  return out;
}

}  // namespace cosec
