#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cosec/graph.hpp"

namespace cosec {

/// Gadget bookkeeping for the perfect-elimination-bipartite construction.
/// Layout of G': base vertices 0..n-1, then a_0..a_{n-1} at n..2n-1, then
/// s, t, x, y, w, z at 2n..2n+5.
struct PebgMap {
  std::size_t base_n = 0;
  Vertex s = 0, t = 0, x = 0, y = 0, w = 0, z = 0;
  std::vector<Vertex> a;     // a[i] is the pendant-side partner of base vertex i
  std::vector<Edge> peo;     // [st, xy, zw, v_0 a_0, ..., v_{n-1} a_{n-1}]

  Vertex base_vertex(std::size_t i) const { return static_cast<Vertex>(i); }
  std::size_t reduced_n() const { return 2 * base_n + 6; }
};

/// Gadget bookkeeping for the star-convex construction. Layout of G':
/// base vertices 0..n-1, then x0, x, y0, y at n..n+3. The star lives on
/// the X side with centre x.
struct ScbMap {
  std::size_t base_n = 0;
  VertexSet base_x;  // base bipartition used for the construction
  VertexSet base_y;
  Vertex x0 = 0, x = 0, y0 = 0, y = 0;
  Vertex center = 0;

  std::size_t reduced_n() const { return base_n + 4; }
  /// X side of G' (base X plus x and x0).
  VertexSet reduced_x() const;
};

struct PebgReduction {
  Graph reduced;
  PebgMap map;
};

struct StarReduction {
  Graph reduced;
  ScbMap map;
};

/// Requires a graph without isolated vertices.
PebgReduction build_pebg(const Graph& g);

/// Normalises a CSDS of G' (y->x, t->s, w->z, a_i->v_i) and returns its
/// trace on the base graph. Throws PreconditionError when S is not a CSDS
/// of G' and ClaimViolation when the trace fails to dominate G or is
/// larger than |S| - 3.
VertexSet extract_dom_pebg(const PebgMap& map, const Graph& g, const Graph& reduced, const VertexSet& s);

/// Requires a bipartite graph without isolated vertices.
StarReduction build_star_convex(const Graph& g);

/// Normalises a CSDS of G' (y0->x, x0->y) and drops x, y. Errors as for
/// extract_dom_pebg with offset 2.
VertexSet extract_dom_star(const ScbMap& map, const Graph& g, const Graph& reduced, const VertexSet& s);

/// uv must be an edge of a bipartite graph. True iff every a ∈ N(v) is
/// adjacent to every b ∈ N(u).
bool is_bisimplicial(const Graph& g, Vertex u, Vertex v);

/// True iff each edge of `order` is bi-simplicial once the endpoints of
/// the earlier edges are removed and nothing is left afterwards.
/// Throws InputError if `order` contains non-edges or edges sharing an
/// endpoint.
bool check_peo(const Graph& g, const std::vector<Edge>& order);

/// A c in `x_side` lying in N(y) for every y outside `x_side` with
/// |N(y)| >= 2, i.e. the centre of a star on the X side making the graph
/// star convex. Among several such centres the one of largest degree
/// wins, then the lowest. Throws InputError if `x_side` is not one side of a
/// bipartition.
std::optional<Vertex> check_star_convex(const Graph& g, const VertexSet& x_side);

/// Every valid centre on the `x_side` star, not only the lowest.
VertexSet star_centers(const Graph& g, const VertexSet& x_side);

/// Same, using the X side of bipartition(g). Throws InputError on
/// non-bipartite graphs.
std::optional<Vertex> check_star_convex(const Graph& g);

enum class ReductionKind { Pebg, StarConvex };

std::string_view to_string(ReductionKind k);
ReductionKind parse_reduction_kind(std::string_view text);

struct DomViaCsds {
  VertexSet dominating;
  bool exact_branch = false;
  std::optional<VertexSet> csds;  // CSDS of G' when the reduction branch ran
};

/// Min-Dom through the reductions: an exact search for a dominating set
/// of size < threshold, otherwise reduce, solve CSDS on G' with
/// approx_csds_isolate_free and extract.
DomViaCsds approx_dom_via_csds(const Graph& g, ReductionKind kind, std::size_t threshold = 1);

}  // namespace cosec
