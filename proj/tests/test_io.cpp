#include <gtest/gtest.h>

#include <json.hpp>

#include "cosec/enumerate.hpp"
#include "cosec/errors.hpp"
#include "cosec/exact.hpp"
#include "cosec/io.hpp"
#include "fixtures.hpp"

using namespace cosec;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(EdgeList, Examples) {
  EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2\n"), fx::path(3));
  EXPECT_NE(error_of("2 1\n0 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("2 1\n0 0\n").find("self-loop"), std::string::npos);
  const Graph g = parse_edge_list("# c\n3 1\n0 2\n");
  EXPECT_EQ(g.m(), 1u);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(EdgeList, Errors) {
  EXPECT_NE(error_of("").find("header"), std::string::npos);
  EXPECT_NE(error_of("3\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("3 1\n0 x\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("3 2\n0 1\n").find("announces 2"), std::string::npos);
  EXPECT_NE(error_of("3 1\n0 5\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("3 2\n0 1\n1 0\n").find("duplicate"), std::string::npos);
  EXPECT_NE(error_of("3 1\n0 1 2\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("3 1\n0 1\n1 2\n").find("line 3"), std::string::npos);
}

TEST(EdgeList, RoundTrip) {
  for (const Graph& g : enumerate_graphs(6, 5)) {
    const std::string text = write_edge_list(g);
    EXPECT_EQ(parse_edge_list(text), g);
    EXPECT_EQ(write_edge_list(parse_edge_list(text)), text);
  }
  EXPECT_EQ(write_edge_list(fx::path(3)), "3 2\n0 1\n1 2\n");
}

TEST(VertexList, Parsing) {
  EXPECT_EQ(parse_vertex_list("0,2,3", 5), fx::set(5, {0, 2, 3}));
  EXPECT_TRUE(parse_vertex_list("", 5).empty());
  EXPECT_THROW(parse_vertex_list("0,9", 5), InputError);
  EXPECT_THROW(parse_vertex_list("0,,1", 5), InputError);
  EXPECT_THROW(parse_vertex_list("a", 5), InputError);
}

TEST(ReductionMapJson, RoundTripPebg) {
  const auto r = build_pebg(fx::path(3));
  const std::string text = reduction_map_to_json(r.map);
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc.at("kind"), "pebg");
  EXPECT_EQ(doc.at("base_n"), 3);
  EXPECT_TRUE(doc.at("gadgets").contains("s"));
  EXPECT_EQ(doc.at("peo").size(), 6u);
  const ReductionMap back = reduction_map_from_json(text);
  ASSERT_TRUE(std::holds_alternative<PebgMap>(back));
  const PebgMap& m = std::get<PebgMap>(back);
  EXPECT_EQ(m.peo, r.map.peo);
  EXPECT_EQ(m.a, r.map.a);
  EXPECT_EQ(m.z, r.map.z);
}

TEST(ReductionMapJson, RoundTripStar) {
  const auto r = build_star_convex(fx::cycle(4));
  const std::string text = reduction_map_to_json(r.map);
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc.at("kind"), "star_convex");
  EXPECT_EQ(doc.at("center"), r.map.x);
  const ReductionMap back = reduction_map_from_json(text);
  ASSERT_TRUE(std::holds_alternative<ScbMap>(back));
  const ScbMap& m = std::get<ScbMap>(back);
  EXPECT_EQ(m.base_x, r.map.base_x);
  EXPECT_EQ(m.base_y, r.map.base_y);
  EXPECT_EQ(m.y0, r.map.y0);
  EXPECT_EQ(m.reduced_x(), r.map.reduced_x());
  EXPECT_THROW(reduction_map_from_json("{\"kind\":\"other\"}"), InputError);
  EXPECT_THROW(reduction_map_from_json("not json"), InputError);
}

TEST(SolutionJson, Schema) {
  const auto r = exact_min(fx::cycle(5), Property::Csds);
  const std::string text = solution_to_json("c5.el", r);
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc.at("graph"), "c5.el");
  EXPECT_EQ(doc.at("kind"), "csds");
  EXPECT_EQ(doc.at("set"), (std::vector<int>{0, 2}));
  EXPECT_EQ(doc.at("cardinality"), 2);
  EXPECT_EQ(doc.at("method"), "exact");
  EXPECT_EQ(solution_set_from_json(text, 5), fx::set(5, {0, 2}));
  EXPECT_THROW(solution_set_from_json(text, 2), InputError);
}
