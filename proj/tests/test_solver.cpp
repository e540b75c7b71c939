#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ifpart/gadgets.hpp"
#include "ifpart/potential.hpp"
#include "ifpart/rng.hpp"
#include "ifpart/solver.hpp"

using namespace ifpart;

namespace {

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

bool exhaustive_sat(const AssignedGraph& ag) {
  int n = ag.vertex_count();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> independent(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) independent[static_cast<size_t>(v)] = mask >> v & 1;
    if (verify_if_partition(ag, Partition::from_mask(independent)).empty()) {
      return true;
    }
  }
  return false;
}

AssignedGraph random_instance(std::uint64_t seed, int max_n) {
  SplitMix64 rng(seed);
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
  Graph g = sparse_near_threshold(n, Rational(5, 2), rng.next());
  return random_assignment(std::move(g), rng.next());
}

}  // namespace

TEST_CASE("forests are always solvable") {
  Graph path(6);
  for (int v = 0; v + 1 < 6; ++v) path.add_edge(v, v + 1);
  SolveResult result = solve_if_partition(AssignedGraph::all_u(path));
  CHECK(result.outcome == SolveResult::Outcome::kSat);
  CHECK(Graph() == Graph());  // trivially exercises empty-graph equality
  CHECK(solve_if_partition(AssignedGraph{}).outcome == SolveResult::Outcome::kSat);
}

TEST_CASE("known unsatisfiable graphs") {
  CHECK(solve_if_partition(AssignedGraph::all_u(k33())).outcome ==
        SolveResult::Outcome::kUnsat);
  for (int k = 3; k <= 5; ++k) {
    CHECK(solve_if_partition(AssignedGraph::all_u(sharpness_graph(k).result))
              .outcome == SolveResult::Outcome::kUnsat);
  }
}

TEST_CASE("five-cycle is satisfiable") {
  SolveResult result = solve_if_partition(AssignedGraph::all_u(cycle(5)));
  REQUIRE(result.outcome == SolveResult::Outcome::kSat);
  CHECK(result.partition->independent.size() == 1);
}

TEST_CASE("preassignments are honored") {
  Graph edge(2);
  edge.add_edge(0, 1);
  AssignedGraph both_i{edge, {VertexLabel::I, VertexLabel::I}};
  CHECK(solve_if_partition(both_i).outcome == SolveResult::Outcome::kUnsat);

  AssignedGraph f_cycle{cycle(3), std::vector<VertexLabel>(3, VertexLabel::F)};
  CHECK(solve_if_partition(f_cycle).outcome == SolveResult::Outcome::kUnsat);
}

TEST_CASE("solver agrees with split enumeration on every small graph") {
  for (int n = 1; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    for (unsigned edge_mask = 0; edge_mask < (1u << bits); ++edge_mask) {
      Graph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
          if (edge_mask >> bit & 1) g.add_edge(u, v);
        }
      }
      AssignedGraph ag = AssignedGraph::all_u(g);
      bool expected = exhaustive_sat(ag);
      SolveResult result = solve_if_partition(ag);
      REQUIRE(result.outcome == (expected ? SolveResult::Outcome::kSat
                                          : SolveResult::Outcome::kUnsat));
    }
  }
}

TEST_CASE("solver agrees with split enumeration on random assigned graphs") {
  for (int trial = 0; trial < 300; ++trial) {
    AssignedGraph ag =
        random_instance(mix_seed(41, static_cast<std::uint64_t>(trial)), 10);
    bool expected = exhaustive_sat(ag);
    SolveResult result = solve_if_partition(ag);
    REQUIRE(result.outcome == (expected ? SolveResult::Outcome::kSat
                                        : SolveResult::Outcome::kUnsat));
  }
}

TEST_CASE("reductions and plain backtracking give identical outcomes") {
  SolveOptions plain;
  plain.use_reductions = false;
  for (int trial = 0; trial < 200; ++trial) {
    AssignedGraph ag =
        random_instance(mix_seed(43, static_cast<std::uint64_t>(trial)), 12);
    CHECK(solve_if_partition(ag).outcome == solve_if_partition(ag, plain).outcome);
  }
}

TEST_CASE("reduction steps extend reduced partitions soundly") {
  long long extended = 0;
  for (int trial = 0; trial < 500; ++trial) {
    AssignedGraph ag =
        random_instance(mix_seed(47, static_cast<std::uint64_t>(trial)), 12);
    for (const ConfigurationReport& config : detect_configurations(ag)) {
      std::optional<ReductionStep> step;
      try {
        step = reduce_configuration(ag, config);
      } catch (const std::invalid_argument&) {
        continue;  // contraction precondition not met
      }
      if (!step) continue;
      SolveResult reduced = solve_if_partition(step->reduced());
      if (reduced.outcome != SolveResult::Outcome::kSat) continue;
      // extend() verifies against the original instance and throws on failure.
      Partition whole = step->extend(*reduced.partition);
      CHECK(whole.independent.size() + whole.forest.size() ==
            static_cast<size_t>(ag.vertex_count()));
      ++extended;
    }
  }
  CHECK(extended > 100);
}

TEST_CASE("single reduction examples match the construction") {
  // pendant U leaf: deleted, then placed on the forest side
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  AssignedGraph ag = AssignedGraph::all_u(path);
  std::vector<ConfigurationReport> configs = detect_configurations(ag);
  bool saw_c1 = false;
  for (const ConfigurationReport& config : configs) {
    if (config.kind != ConfigKind::kC1) continue;
    saw_c1 = true;
    std::optional<ReductionStep> step = reduce_configuration(ag, config);
    REQUIRE(step.has_value());
    CHECK(step->reduced().vertex_count() == 2);
    CHECK(step->unsat_propagates());
    SolveResult reduced = solve_if_partition(step->reduced());
    REQUIRE(reduced.outcome == SolveResult::Outcome::kSat);
    Partition whole = step->extend(*reduced.partition);
    CHECK(verify_if_partition(ag, whole).empty());
  }
  CHECK(saw_c1);
}

TEST_CASE("node cap yields an inconclusive outcome, never a wrong answer") {
  SolveOptions tight;
  tight.node_cap = 3;
  tight.use_reductions = false;
  SolveResult result =
      solve_if_partition(AssignedGraph::all_u(sharpness_graph(3).result), tight);
  CHECK(result.outcome == SolveResult::Outcome::kInconclusive);
  CHECK(result.stats.capped);
}
