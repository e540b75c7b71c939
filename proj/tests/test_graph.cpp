#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ifpart/graph.hpp"

using namespace ifpart;

namespace {

Graph from_mask(int n, std::uint32_t edge_mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((edge_mask >> bit) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("basic graph invariants") {
  Graph g(4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));  // duplicate
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(3) == 0);
}

TEST_CASE("induced subgraph with index map") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  std::vector<int> verts = {1, 2, 4};
  std::vector<int> to_original;
  Graph sub = g.induced(verts, &to_original);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 1);
  CHECK(to_original == std::vector<int>{1, 2, 4});
  CHECK(g.edges_within(verts) == 1);
}

TEST_CASE("graph6 fixed strings") {
  GraphParseResult r = parse_graph("D?{", GraphFormat::kGraph6);
  CHECK(r.graph.vertex_count() == 5);
  CHECK(to_graph6(r.graph) == "D?{");

  // optional header
  GraphParseResult with_header = parse_graph(">>graph6<<D?{", GraphFormat::kGraph6);
  CHECK(with_header.graph == r.graph);

  // K_3
  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(0, 2);
  k3.add_edge(1, 2);
  CHECK(to_graph6(k3) == "Bw");
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph("", GraphFormat::kGraph6), ParseError);
  CHECK_THROWS_AS(parse_graph("D?", GraphFormat::kGraph6), ParseError);   // short body
  CHECK_THROWS_AS(parse_graph("D?{{", GraphFormat::kGraph6), ParseError); // long body
  CHECK_THROWS_AS(parse_graph("D?\x01", GraphFormat::kGraph6), ParseError);
  // nonzero padding bits
  CHECK_THROWS_AS(parse_graph("A?" + std::string(1, char(63 + 1)),
                              GraphFormat::kGraph6),
                  ParseError);
}

TEST_CASE("graph6 round trip, exhaustive small and sampled larger") {
  for (int n = 0; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
      Graph g = from_mask(n, mask);
      GraphParseResult back = parse_graph(to_graph6(g), GraphFormat::kGraph6);
      REQUIRE(back.graph == g);
    }
  }
  std::uint64_t state = 12345;
  for (int n = 6; n <= 7; ++n) {
    for (int trial = 0; trial < 4000; ++trial) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      Graph g = from_mask(n, static_cast<std::uint32_t>(state >> 32));
      GraphParseResult back = parse_graph(to_graph6(g), GraphFormat::kGraph6);
      REQUIRE(back.graph == g);
    }
  }
}

TEST_CASE("graph6 extended size header") {
  Graph g(100);
  for (int v = 1; v < 100; ++v) g.add_edge(0, v);
  std::string text = to_graph6(g);
  CHECK(text[0] == '~');
  GraphParseResult back = parse_graph(text, GraphFormat::kGraph6);
  CHECK(back.graph == g);
}

TEST_CASE("edge list parsing") {
  GraphParseResult r = parse_graph("0 1\n1 2", GraphFormat::kEdgeList);
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.warnings.empty());

  CHECK_THROWS_AS(parse_graph("0 0", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1 2", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("0 x", GraphFormat::kEdgeList), ParseError);

  GraphParseResult dup = parse_graph("0 1\n1 0\n", GraphFormat::kEdgeList);
  CHECK(dup.graph.edge_count() == 1);
  CHECK(dup.warnings.size() == 1);

  GraphParseResult pinned =
      parse_graph("# n 5\n0 1\n", GraphFormat::kEdgeList);
  CHECK(pinned.graph.vertex_count() == 5);
}

TEST_CASE("edge list round trip keeps isolated vertices") {
  Graph g(6);
  g.add_edge(0, 2);
  g.add_edge(2, 4);
  GraphParseResult back = parse_graph(to_edge_list(g), GraphFormat::kEdgeList);
  CHECK(back.graph == g);

  Graph empty(3);
  CHECK(parse_graph(to_edge_list(empty), GraphFormat::kEdgeList).graph == empty);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_graph("0 1\nbroken", GraphFormat::kEdgeList);
    FAIL("expected a parse error");
  } catch (const ParseError& error) {
    CHECK(error.line() == 2);
  }
}
