#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ifpart/rng.hpp"
#include "ifpart/solver.hpp"
#include "ifpart/starcolor.hpp"

using namespace ifpart;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph k33() {
  Graph g(6);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("verifier rejects bicolored four-vertex paths") {
  Graph p4 = path(4);
  CHECK_FALSE(verify_star_coloring(p4, {{1, 2, 1, 2}}).empty());
  CHECK(verify_star_coloring(p4, {{1, 2, 3, 1}}).empty());
  CHECK_FALSE(verify_star_coloring(p4, {{1, 1, 2, 3}}).empty());  // improper

  Graph c5 = cycle(5);
  std::vector<StarViolation> violations = verify_star_coloring(c5, {{1, 2, 1, 2, 3}});
  REQUIRE_FALSE(violations.empty());
  CHECK(violations[0].kind == StarViolation::Kind::kBicoloredP4);

  CHECK_THROWS_AS(verify_star_coloring(p4, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_star_coloring(p4, {{0, 1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("forest coloring uses depth mod 3") {
  ColoringResult p7 = star_color_forest(path(7));
  CHECK(p7.coloring.colors == std::vector<int>{1, 2, 3, 1, 2, 3, 1});
  CHECK(p7.colors_used == 3);
  CHECK(verify_star_coloring(path(7), p7.coloring).empty());

  Graph star(5);
  for (int v = 1; v < 5; ++v) star.add_edge(0, v);
  ColoringResult k14 = star_color_forest(star);
  CHECK(k14.coloring.colors == std::vector<int>{1, 2, 2, 2, 2});
  CHECK(k14.colors_used == 2);

  CHECK(star_color_forest(Graph(1)).colors_used == 1);
  CHECK_THROWS_AS(star_color_forest(cycle(4)), std::invalid_argument);
}

TEST_CASE("coloring synthesized from a partition") {
  Graph c5 = cycle(5);
  Partition p{{0}, {1, 2, 3, 4}};
  ColoringResult result = star_coloring_from_partition(c5, p);
  CHECK(result.colors_used == 4);
  CHECK(result.coloring.colors[0] == 4);
  CHECK(verify_star_coloring(c5, result.coloring).empty());
  CHECK(star_forest_pairs_check(c5, result.coloring));

  Partition bad{{0, 1}, {2, 3, 4}};
  CHECK_THROWS_AS(star_coloring_from_partition(c5, bad), std::invalid_argument);
}

TEST_CASE("exact star chromatic numbers") {
  CHECK(star_chromatic_number(path(4)).colors_used == 3);
  CHECK(star_chromatic_number(cycle(5)).colors_used == 4);
  CHECK(star_chromatic_number(k33()).colors_used == 4);
  CHECK(star_chromatic_number(Graph(3)).colors_used == 1);
  CHECK(star_chromatic_number(Graph(0)).colors_used == 0);
  CHECK_THROWS_AS(star_chromatic_number(Graph(13)), std::invalid_argument);

  ColoringResult c5 = star_chromatic_number(cycle(5));
  CHECK(verify_star_coloring(cycle(5), c5.coloring).empty());
}

TEST_CASE("both star checkers agree on random colorings") {
  for (int trial = 0; trial < 1000; ++trial) {
    SplitMix64 rng(mix_seed(61, static_cast<std::uint64_t>(trial)));
    int n = 1 + static_cast<int>(rng.below(12));
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    Graph g = gnm(n, static_cast<long long>(rng.below(
                        static_cast<std::uint64_t>(max_edges + 1))),
                  rng.next());
    std::vector<int> colors(static_cast<size_t>(n));
    int palette = 2 + static_cast<int>(rng.below(3));
    for (int& c : colors) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(palette)));
    StarColoring coloring{colors};
    bool p4_clean = verify_star_coloring(g, coloring).empty();
    bool pairs_clean = star_forest_pairs_check(g, coloring);
    REQUIRE(p4_clean == pairs_clean);
  }
}

TEST_CASE("partitions found by the solver induce star 4-colorings") {
  for (int trial = 0; trial < 150; ++trial) {
    SplitMix64 rng(mix_seed(67, static_cast<std::uint64_t>(trial)));
    int n = 3 + static_cast<int>(rng.below(8));
    Graph g = sparse_near_threshold(n, Rational(5, 2), rng.next());
    SolveResult result = solve_if_partition(AssignedGraph::all_u(g));
    if (result.outcome != SolveResult::Outcome::kSat) continue;
    ColoringResult coloring = star_coloring_from_partition(g, *result.partition);
    CHECK(coloring.colors_used <= 4);
    CHECK(verify_star_coloring(g, coloring.coloring).empty());
    CHECK(star_forest_pairs_check(g, coloring.coloring));
  }
}
