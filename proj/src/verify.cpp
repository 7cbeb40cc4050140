#include "cosec/verify.hpp"

#include <string>

#include "cosec/errors.hpp"

namespace cosec {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::Dominating: return "dominating";
    case Property::DoubleDominating: return "double_dominating";
    case Property::Csds: return "csds";
    case Property::PartialMonopoly: return "partial_monopoly";
  }
  return "?";
}

Property parse_property(std::string_view text) {
  if (text == "dom" || text == "dominating") return Property::Dominating;
  if (text == "double" || text == "double_dominating") return Property::DoubleDominating;
  if (text == "csds") return Property::Csds;
  if (text == "monopoly" || text == "partial_monopoly") return Property::PartialMonopoly;
  throw InputError("unknown property '" + std::string(text) + "'");
}

bool is_superset_closed(Property p) { return p == Property::Dominating || p == Property::DoubleDominating; }

std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::None: return "none";
    case FailureReason::Undominated: return "undominated";
    case FailureReason::UnderDominated: return "under_dominated";
    case FailureReason::NoReplacement: return "no_replacement";
    case FailureReason::MonopolyDeficit: return "monopoly_deficit";
  }
  return "?";
}

namespace {

void require_same_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n())
    throw InputError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                     std::to_string(g.n()));
}

// Vertices outside S with fewer than `need` neighbours in S.
Certificate outside_coverage(const Graph& g, const VertexSet& s, std::size_t need, FailureReason reason) {
  require_same_universe(g, s);
  Certificate c;
  c.failing = VertexSet(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (s.contains(v)) continue;
    if (g.open_neighborhood(v).intersection_size(s) < need) c.failing.insert(v);
  }
  c.verdict = c.failing.empty();
  c.reason = c.verdict ? FailureReason::None : reason;
  return c;
}

void require_member(const VertexSet& s, Vertex u) {
  if (!s.contains(u)) throw InputError("vertex " + std::to_string(u) + " is not a member of the set");
}

}  // namespace

Certificate is_dominating(const Graph& g, const VertexSet& d) {
  return outside_coverage(g, d, 1, FailureReason::Undominated);
}

Certificate is_double_dominating(const Graph& g, const VertexSet& d) {
  return outside_coverage(g, d, 2, FailureReason::UnderDominated);
}

VertexSet epn(const Graph& g, const VertexSet& s, Vertex u) {
  require_same_universe(g, s);
  require_member(s, u);
  VertexSet out(g.n());
  for (Vertex w : g.neighbors(u))
    if (!s.contains(w) && g.open_neighborhood(w).intersection_size(s) == 1) out.insert(w);
  return out;
}

VertexSet replacements(const Graph& g, const VertexSet& s, Vertex u) {
  const VertexSet private_nbrs = epn(g, s, u);
  VertexSet out(g.n());
  for (Vertex v : g.neighbors(u)) {
    if (s.contains(v)) continue;
    if (private_nbrs.is_subset_of(g.closed_neighborhood(v))) out.insert(v);
  }
  return out;
}

Certificate is_csds(const Graph& g, const VertexSet& s) {
  Certificate c = is_dominating(g, s);
  if (!c.verdict) return c;
  for (Vertex u : s) {
    VertexSet r = replacements(g, s, u);
    if (r.empty()) {
      c.failing.insert(u);
      c.witnesses[u] = epn(g, s, u);
    } else if (c.failing.empty()) {
      c.witnesses[u] = std::move(r);
    }
  }
  if (!c.failing.empty()) {
    // keep only the failing members' EPN sets
    std::erase_if(c.witnesses, [&](const auto& kv) { return !c.failing.contains(kv.first); });
    c.verdict = false;
    c.reason = FailureReason::NoReplacement;
  }
  return c;
}

Certificate is_partial_monopoly(const Graph& g, const VertexSet& m) {
  require_same_universe(g, m);
  Certificate c;
  c.failing = VertexSet(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (m.contains(v)) continue;
    std::size_t inside = g.open_neighborhood(v).intersection_size(m);  // v ∉ M
    if (2 * inside < g.degree(v) + 1) c.failing.insert(v);
  }
  c.verdict = c.failing.empty();
  c.reason = c.verdict ? FailureReason::None : FailureReason::MonopolyDeficit;
  return c;
}

Certificate check_property(const Graph& g, const VertexSet& s, Property p) {
  switch (p) {
    case Property::Dominating: return is_dominating(g, s);
    case Property::DoubleDominating: return is_double_dominating(g, s);
    case Property::Csds: return is_csds(g, s);
    case Property::PartialMonopoly: return is_partial_monopoly(g, s);
  }
  throw InputError("unknown property");
}

namespace {

void require_superset_closed(Property p) {
  if (!is_superset_closed(p))
    throw UnsupportedProperty("minimality by single removal is not defined for " + std::string(to_string(p)));
}

}  // namespace

bool is_minimal(const Graph& g, const VertexSet& s, Property p) {
  require_superset_closed(p);
  if (!check_property(g, s, p).verdict)
    throw PreconditionError("set " + s.to_string() + " is not " + std::string(to_string(p)));
  VertexSet trial = s;
  for (Vertex u : s) {
    trial.erase(u);
    if (check_property(g, trial, p).verdict) return false;
    trial.insert(u);
  }
  return true;
}

VertexSet prune_to_minimal(const Graph& g, const VertexSet& s, Property p) {
  require_superset_closed(p);
  if (!check_property(g, s, p).verdict)
    throw PreconditionError("set " + s.to_string() + " is not " + std::string(to_string(p)));
  VertexSet current = s;
  for (Vertex u : s) {
    current.erase(u);
    if (!check_property(g, current, p).verdict) current.insert(u);
  }
  return current;
}

}  // namespace cosec
