#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cosec/exact.hpp"
#include "cosec/graph.hpp"

namespace cosec {

struct GreedyTrace {
  std::vector<std::pair<Vertex, std::size_t>> picks;  // (vertex, coverage gained)
  VertexSet final_set;
};

/// Greedy multiset multicover: every vertex needs coverage 2, choosing v
/// covers v twice and each neighbour once. Ties go to the lowest vertex.
GreedyTrace greedy_double_dominating_trace(const Graph& g);
VertexSet greedy_double_dominating(const Graph& g);

/// Greedy double domination pruned to a minimal double dominating set,
/// which is co-secure dominating when every vertex has degree >= 2.
/// Throws PreconditionError naming a vertex of degree < 2.
SolveResult approx_csds(const Graph& g);

/// Variant for any graph without isolated vertices. Pendant vertices are
/// settled up front (a support with one pendant joins the set, a support
/// with several pendants leaves them in the set) and the rest is solved
/// by the same multicover + pruning scheme. Equals approx_csds when the
/// minimum degree is at least 2.
SolveResult approx_csds_isolate_free(const Graph& g);

/// Output of the cubic / quartic heuristics with their intermediate sets.
struct RegularCsds {
  SolveResult result;
  VertexSet picked;     // vertices taken by the covering loop
  VertexSet leftover;   // vertices never deleted
  VertexSet unpruned;   // V \ (picked ∪ leftover), before the defensive prune
};

/// Repeatedly takes the lexicographically least residual edge uv and
/// deletes N[u] ∪ N[v]. Requires a 3-regular graph.
RegularCsds approx_csds_3reg(const Graph& g);

struct PathOrCycle {
  std::vector<Vertex> vertices;
  bool closed = false;
};

/// Maximal induced path grown greedily from the lowest vertex with a
/// residual edge (tail first, then head, lowest candidate each time),
/// closed into an induced cycle when a vertex sees exactly the two ends.
/// nullopt iff the residual graph has no edge.
std::optional<PathOrCycle> find_induced_path_or_cycle(const GraphView& residual);

/// Repeatedly removes a maximal induced path or cycle together with its
/// residual neighbours. Requires a 4-regular graph.
RegularCsds approx_csds_4reg(const Graph& g);

struct DoubleDomConversion {
  VertexSet set;
  std::size_t safety_net_additions = 0;
  bool within_bound = true;  // |S'| <= 2|S|
};

/// Adds one replacement vertex (lowest) for each member with a non-empty
/// EPN. A fallback adds the lowest under-dominated vertex until the result
/// double dominates; `safety_net_additions` counts how often it fired.
/// Throws PreconditionError if S is not a CSDS.
DoubleDomConversion csds_to_double_dominating(const Graph& g, const VertexSet& s);

}  // namespace cosec
