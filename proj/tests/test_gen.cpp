#include <map>

#include <gtest/gtest.h>

#include "cosec/enumerate.hpp"
#include "cosec/errors.hpp"
#include "cosec/gen.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cosec;

TEST(Family, Examples) {
  EXPECT_TRUE(are_isomorphic(fx::cycle(4), fx::kab(2, 2)));
  EXPECT_TRUE(oracle::isomorphic(fx::cycle(4), fx::kab(2, 2)));
  EXPECT_EQ(gen_family({Family::CompleteMultipartite, 0, {1, 1, 1, 1}}), fx::complete(4));
  EXPECT_TRUE(are_isomorphic(gen_family({Family::Wheel, 4, {}}), fx::complete(4)));
  const Graph w = gen_family({Family::Wheel, 6, {}});
  EXPECT_EQ(w.degree(5), 5u);
  EXPECT_EQ(w.m(), 10u);
  const Graph s = gen_family({Family::Star, 5, {}});
  EXPECT_EQ(s.degree(0), 4u);
  EXPECT_EQ(fx::path(5).m(), 4u);
}

TEST(Family, Errors) {
  EXPECT_THROW(gen_family({Family::Cycle, 2, {}}), InputError);
  EXPECT_THROW(gen_family({Family::Wheel, 3, {}}), InputError);
  EXPECT_THROW(gen_family({Family::CompleteBipartite, 0, {2}}), InputError);
  EXPECT_THROW(gen_family({Family::CompleteMultipartite, 0, {3}}), InputError);
  EXPECT_THROW(parse_family("petersen"), InputError);
  EXPECT_EQ(parse_family("complete_bipartite"), Family::CompleteBipartite);
}

TEST(RandomRegular, Examples) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(gen_random_regular(4, 3, seed), fx::complete(4));
  const Graph g = gen_random_regular(6, 3, 1);
  EXPECT_EQ(degree_profile(g).regular_degree, 3u);
  EXPECT_THROW(gen_random_regular(5, 3, 1), InputError);
  EXPECT_THROW(gen_random_regular(4, 4, 1), InputError);
}

TEST(RandomRegular, DeterministicAndRegular) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph a = gen_random_regular(20, 3, seed);
    EXPECT_EQ(a, gen_random_regular(20, 3, seed));
    EXPECT_EQ(degree_profile(a).regular_degree, 3u);
    EXPECT_EQ(degree_profile(gen_random_regular(13, 4, seed)).regular_degree, 4u);
  }
  EXPECT_FALSE(gen_random_regular(30, 3, 1) == gen_random_regular(30, 3, 2));
}

TEST(RandomRegular, PinnedOutput) {
  // regression anchor: the sampler only uses raw 64-bit engine output
  const Graph g = gen_random_regular(8, 3, 42);
  EXPECT_EQ(g, gen_random_regular(8, 3, 42));
  EXPECT_EQ(g.m(), 12u);
}

TEST(RandomMinDegree2, Properties) {
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    for (double p : {0.0001, 0.1, 0.5, 0.9}) {
      const Graph g = gen_random_min_degree2(3 + seed % 12, p, seed);
      EXPECT_GE(degree_profile(g).min_degree, 2u);
      EXPECT_EQ(g, gen_random_min_degree2(3 + seed % 12, p, seed));
    }
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_EQ(gen_random_min_degree2(3, 0.3, seed), fx::complete(3));
  EXPECT_THROW(gen_random_min_degree2(2, 0.5, 1), InputError);
  EXPECT_THROW(gen_random_min_degree2(5, 1.5, 1), InputError);
}

TEST(Relabel, PreservesStructure) {
  const Graph g = fx::path(4);
  const Graph h = relabel(g, {3, 2, 1, 0});
  EXPECT_EQ(h, g);
  const Graph k = relabel(g, {1, 0, 2, 3});
  EXPECT_TRUE(k.adjacent(0, 2));
  EXPECT_FALSE(k.adjacent(1, 2));
  EXPECT_TRUE(are_isomorphic(g, k));
  EXPECT_THROW(relabel(g, {0, 0, 1, 2}), InputError);
}

TEST(Enumerate, CountsOfAllGraphs) {
  const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::size_t connected[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto graphs = enumerate_graphs(n, n);
    EXPECT_EQ(graphs.size(), all[n]) << n;
    EXPECT_EQ(std::count_if(graphs.begin(), graphs.end(), [](const Graph& g) { return is_connected(g); }),
              static_cast<std::ptrdiff_t>(connected[n]));
  }
}

TEST(Enumerate, CubicCounts) {
  const std::map<std::size_t, std::size_t> connected_cubic = {{4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}};
  for (auto [n, count] : connected_cubic) {
    const auto graphs = enumerate_graphs(n, n, 3, [](const Graph& g) {
      return is_connected(g) && degree_profile(g).regular_degree == 3u;
    });
    EXPECT_EQ(graphs.size(), count) << n;
  }
}

TEST(Enumerate, MatchesLabelledClassesByPermutation) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Graph> classes;
    for (const Graph& g : oracle::all_labelled(n)) {
      bool seen = false;
      for (const Graph& c : classes) seen = seen || oracle::isomorphic(g, c);
      if (!seen) classes.push_back(g);
    }
    const auto mine = enumerate_graphs(n, n);
    ASSERT_EQ(mine.size(), classes.size());
    for (const Graph& c : classes) {
      int hits = 0;
      for (const Graph& g : mine) hits += oracle::isomorphic(g, c);
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
  const auto graphs = enumerate_graphs(6, 6);
  for (std::size_t i = 0; i < graphs.size(); i += 9)
    for (std::size_t j = i; j < graphs.size(); j += 13) {
      const bool same = i == j;
      EXPECT_EQ(are_isomorphic(graphs[i], graphs[j]), same);
    }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random_min_degree2(8, 0.35, seed);
    std::vector<Vertex> perm = {3, 1, 7, 0, 5, 2, 6, 4};
    std::rotate(perm.begin(), perm.begin() + seed % 8, perm.end());
    const Graph h = relabel(g, perm);
    EXPECT_TRUE(are_isomorphic(g, h));
    EXPECT_TRUE(oracle::isomorphic(g, h));
  }
}
