#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cosec/graph.hpp"

namespace cosec {

enum class Family { Path, Cycle, Complete, CompleteBipartite, CompleteMultipartite, Wheel, Star };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

/// `n` is used by the single-parameter families; `parts` by the
/// bipartite (exactly two entries) and multipartite (two or more) ones.
struct FamilySpec {
  Family family = Family::Path;
  std::size_t n = 0;
  std::vector<std::size_t> parts;
};

/// Canonical labelling: paths and cycles are consecutive, the wheel hub is
/// n-1, the star centre is 0, multipartite parts are contiguous blocks in
/// the given order.
Graph gen_family(const FamilySpec& spec);

/// Configuration-model sampling with rejection of loops and multi-edges.
/// Deterministic for a fixed seed.
Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t max_attempts = 100000);

/// G(n, p) patched so every vertex has degree >= 2: deficient vertices are
/// joined to their nearest non-neighbours by identifier.
Graph gen_random_min_degree2(std::size_t n, double p, std::uint64_t seed);

/// Relabel: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace cosec
