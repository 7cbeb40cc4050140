#include <gtest/gtest.h>

#include "cosec/enumerate.hpp"
#include "cosec/errors.hpp"
#include "cosec/graph.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cosec;

TEST(VertexSet, BasicOperations) {
  VertexSet a(130, {0, 64, 129});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(64));
  EXPECT_FALSE(a.contains(63));
  EXPECT_FALSE(a.contains(500));
  EXPECT_EQ(a.to_string(), "{0,64,129}");
  EXPECT_EQ(a.first(), 0u);
  EXPECT_EQ(a.next(0), 64u);
  EXPECT_EQ(a.next(129), 130u);
  VertexSet b(130, {64, 100});
  EXPECT_EQ((a & b).to_vector(), std::vector<Vertex>{64});
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 129}));
  EXPECT_EQ(a.intersection_size(b), 1u);
  EXPECT_EQ(a.complement().size(), 127u);
  EXPECT_TRUE(VertexSet(130, {0}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(VertexSet::full(130).complement().empty());
  EXPECT_EQ(VertexSet(5).first(), 5u);
}

TEST(VertexSet, RangeAndUniverseErrors) {
  VertexSet a(4);
  EXPECT_THROW(a.insert(4), InputError);
  EXPECT_THROW(a |= VertexSet(5), InputError);
  EXPECT_THROW(VertexSet::from_vector(3, {3}), InputError);
}

TEST(VertexSet, IterationIsAscending) {
  VertexSet s(200, {199, 3, 70, 64, 63});
  std::vector<Vertex> seen(s.begin(), s.end());
  EXPECT_EQ(seen, (std::vector<Vertex>{3, 63, 64, 70, 199}));
}

TEST(BuildGraph, PathDegrees) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
  EXPECT_EQ(g.m(), 2u);
}

TEST(BuildGraph, CompleteGraph) {
  const Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto p = degree_profile(g);
  EXPECT_EQ(p.min_degree, 3u);
  EXPECT_EQ(p.max_degree, 3u);
}

TEST(BuildGraph, RejectsBadEdges) {
  EXPECT_THROW(build_graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(build_graph(2, {{0, 2}}), InputError);
  EXPECT_THROW(build_graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(build_graph(3, {{0, 1}, {0, 1}}), InputError);
}

TEST(BuildGraph, ErrorNamesThePair) {
  try {
    build_graph(3, {{1, 2}, {2, 1}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(ClosedNeighborhood, Examples) {
  EXPECT_EQ(closed_neighborhood(fx::path(3), 1), fx::set(3, {0, 1, 2}));
  EXPECT_EQ(closed_neighborhood(fx::complete(4), 0), fx::set(4, {0, 1, 2, 3}));
  EXPECT_EQ(closed_neighborhood(fx::path(3), 0), fx::set(3, {0, 1}));
  EXPECT_THROW(closed_neighborhood(fx::path(3), 3), InputError);
}

TEST(ClosedNeighborhood, SizeIsDegreePlusOne) {
  for (const Graph& g : enumerate_graphs(6, 5))
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_EQ(g.closed_neighborhood(v).size(), g.degree(v) + 1);
}

TEST(DegreeProfile, Examples) {
  const auto k4 = degree_profile(fx::complete(4));
  EXPECT_EQ(k4.min_degree, 3u);
  EXPECT_EQ(k4.regular_degree, 3u);
  const auto p3 = degree_profile(fx::path(3));
  EXPECT_EQ(p3.min_degree, 1u);
  EXPECT_EQ(p3.max_degree, 2u);
  EXPECT_FALSE(p3.regular_degree.has_value());
  EXPECT_EQ(degree_profile(fx::cycle(5)).regular_degree, 2u);
  EXPECT_THROW(degree_profile(Graph(0, {})), InputError);
}

TEST(Graph, SymmetricAndEdgeCount) {
  for (const Graph& g : enumerate_graphs(6, 5)) {
    std::size_t total = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
      total += g.degree(u);
      for (Vertex v : g.neighbors(u)) EXPECT_TRUE(g.adjacent(v, u));
      EXPECT_TRUE(std::is_sorted(g.neighbors(u).begin(), g.neighbors(u).end()));
    }
    EXPECT_EQ(total, 2 * g.m());
  }
}

TEST(ResidualDelete, Examples) {
  const Graph k4 = fx::complete(4);
  const auto r = residual_delete(k4, k4.closed_neighborhood(0) | k4.closed_neighborhood(1));
  EXPECT_FALSE(r.has_edge());
  EXPECT_TRUE(r.alive().empty());

  const Graph c5 = fx::cycle(5);
  const auto p = residual_delete(c5, fx::set(5, {0}));
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(p.degree(1), 1u);

  const auto same = residual_delete(c5, c5.empty_set());
  EXPECT_EQ(same.edges(), c5.edges());
}

TEST(ResidualDelete, MatchesBruteForceEdgeFilter) {
  for (const Graph& g : enumerate_graphs(7, 6)) {
    for (std::uint64_t x = 0; x < (1u << g.n()); x += 5) {
      const VertexSet del = oracle::set_of(g.n(), x);
      std::vector<Edge> expect;
      for (auto [u, v] : g.edges())
        if (!del.contains(u) && !del.contains(v)) expect.emplace_back(u, v);
      EXPECT_EQ(residual_delete(g, del).edges(), expect);
    }
  }
}

TEST(ResidualDelete, Composes) {
  const Graph g = fx::cycle(7);
  const VertexSet a = fx::set(7, {0, 3});
  const VertexSet b = fx::set(7, {5});
  EXPECT_EQ(residual_delete(residual_delete(g, a), b).edges(), residual_delete(g, a | b).edges());
  EXPECT_EQ(residual_delete(g, a).deleted(), a);
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connected_components(fx::path(3)), std::vector<VertexSet>{fx::set(3, {0, 1, 2})});
  EXPECT_EQ(connected_components(build_graph(4, {{0, 1}, {2, 3}})),
            (std::vector<VertexSet>{fx::set(4, {0, 1}), fx::set(4, {2, 3})}));
  EXPECT_EQ(connected_components(Graph(3, {})),
            (std::vector<VertexSet>{fx::set(3, {0}), fx::set(3, {1}), fx::set(3, {2})}));
}

TEST(Bipartition, Examples) {
  const auto c4 = bipartition(fx::cycle(4));
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->x, fx::set(4, {0, 2}));
  EXPECT_EQ(c4->y, fx::set(4, {1, 3}));
  EXPECT_FALSE(bipartition(fx::complete(3)));
  const auto p3 = bipartition(fx::path(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->x, fx::set(3, {0, 2}));
  EXPECT_EQ(p3->y, fx::set(3, {1}));
}

TEST(Bipartition, SidesHaveNoInternalEdges) {
  for (const Graph& g : enumerate_graphs(7, 6)) {
    const auto b = bipartition(g);
    if (b) {
      EXPECT_EQ((b->x | b->y).size(), g.n());
      EXPECT_FALSE(b->x.intersects(b->y));
      for (auto [u, v] : g.edges()) EXPECT_NE(b->x.contains(u), b->x.contains(v));
    } else {
      // no 2-colouring at all
      for (std::uint64_t c = 0; c < (1u << g.n()); ++c) {
        bool ok = true;
        for (auto [u, v] : g.edges()) ok = ok && (((c >> u) ^ (c >> v)) & 1u);
        EXPECT_FALSE(ok);
      }
    }
  }
}
