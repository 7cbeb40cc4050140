#pragma once

#include <functional>
#include <vector>

#include "cosec/graph.hpp"

namespace cosec {

/// One representative of every isomorphism class of graphs on n vertices
/// (n <= 16) with maximum degree at most `max_degree`. Built by vertex
/// extension of the (n-1)-vertex classes, which is complete because the
/// degree bound is inherited by vertex-deleted subgraphs. Duplicates are
/// removed with a colour-refinement hash and an exact isomorphism test.
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t max_degree);

/// enumerate_graphs filtered by a predicate, for n in [n_min, n_max].
std::vector<Graph> enumerate_graphs(std::size_t n_min, std::size_t n_max, std::size_t max_degree,
                                    const std::function<bool(const Graph&)>& keep);

/// Exact isomorphism test by refinement-guided backtracking (n <= 16).
bool are_isomorphic(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

}  // namespace cosec
