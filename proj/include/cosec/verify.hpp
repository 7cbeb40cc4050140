#pragma once

#include <map>
#include <string_view>

#include "cosec/graph.hpp"

namespace cosec {

enum class Property { Dominating, DoubleDominating, Csds, PartialMonopoly };

std::string_view to_string(Property p);
/// Accepts "dom", "double", "csds", "monopoly" and the long spellings.
Property parse_property(std::string_view text);
/// Dominating and double dominating are superset-closed; the others are not.
bool is_superset_closed(Property p);

enum class FailureReason {
  None,
  Undominated,        // some vertex outside the set has no neighbor in it
  UnderDominated,     // some vertex outside the set has fewer than two
  NoReplacement,      // some member has no valid swap partner
  MonopolyDeficit,    // 2|M ∩ N[v]| < |N[v]| for some v outside M
};

std::string_view to_string(FailureReason r);

/// Verdict plus auditable witnesses.
///
/// On success of a CSDS check, `witnesses[u]` holds every replacement
/// vertex of member u. On failure, `failing` lists the offending vertices;
/// for NoReplacement, `witnesses[u]` holds EPN(u, S) for each failing u.
struct Certificate {
  bool verdict = false;
  FailureReason reason = FailureReason::None;
  VertexSet failing;
  std::map<Vertex, VertexSet> witnesses;

  explicit operator bool() const { return verdict; }
};

Certificate is_dominating(const Graph& g, const VertexSet& d);
Certificate is_double_dominating(const Graph& g, const VertexSet& d);

/// S-external private neighbours of u: {w ∉ S : N(w) ∩ S = {u}}.
VertexSet epn(const Graph& g, const VertexSet& s, Vertex u);

/// Vertices v ∈ N(u) \ S with EPN(u,S) ⊆ N[v]; for a dominating S these
/// are exactly the v for which (S \ {u}) ∪ {v} still dominates.
VertexSet replacements(const Graph& g, const VertexSet& s, Vertex u);

Certificate is_csds(const Graph& g, const VertexSet& s);
Certificate is_partial_monopoly(const Graph& g, const VertexSet& m);

Certificate check_property(const Graph& g, const VertexSet& s, Property p);

/// Single-removal minimality. Throws UnsupportedProperty for CSDS and
/// partial monopoly, PreconditionError if S does not satisfy p.
bool is_minimal(const Graph& g, const VertexSet& s, Property p);

/// One ascending pass dropping every vertex whose removal keeps p.
/// For superset-closed p the result is minimal.
VertexSet prune_to_minimal(const Graph& g, const VertexSet& s, Property p);

}  // namespace cosec
