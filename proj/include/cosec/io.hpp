#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "cosec/exact.hpp"
#include "cosec/graph.hpp"
#include "cosec/reduce.hpp"

namespace cosec {

/// Edge-list text: optional '#' comment lines (and blank lines), a header
/// "n m", then m lines "u v". Errors name the line and column.
Graph parse_edge_list(std::string_view text);
/// Canonical form: header then edges with u < v in lexicographic order.
std::string write_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// "0,2,3" (empty string is the empty set).
VertexSet parse_vertex_list(std::string_view text, std::size_t universe);

using ReductionMap = std::variant<PebgMap, ScbMap>;

/// JSON with keys "kind", "base_n", "gadgets" and "peo" (pebg) or
/// "center" plus "sides" (star convex).
std::string reduction_map_to_json(const ReductionMap& map);
ReductionMap reduction_map_from_json(std::string_view text);

/// {"graph","kind","set","cardinality","method"} on one line.
std::string solution_to_json(const std::string& graph_path, const SolveResult& result);
/// Reads the "set" array of a solution document.
VertexSet solution_set_from_json(std::string_view text, std::size_t universe);

}  // namespace cosec
