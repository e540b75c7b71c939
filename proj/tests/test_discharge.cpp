#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "ifpart/discharge.hpp"
#include "ifpart/gadgets.hpp"
#include "ifpart/potential.hpp"
#include "ifpart/rng.hpp"

using namespace ifpart;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph k4() {
  Graph g(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);      // outer cycle
    g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    g.add_edge(v, 5 + v);            // spokes
  }
  return g;
}

bool has_kind(const std::vector<ConfigurationReport>& configs, ConfigKind kind) {
  return std::any_of(configs.begin(), configs.end(),
                     [&](const ConfigurationReport& c) { return c.kind == kind; });
}

long long whole_rho(const AssignedGraph& ag) {
  std::vector<int> all(static_cast<size_t>(ag.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return potential(ag, all);
}

}  // namespace

TEST_CASE("open thread between two branch vertices") {
  // two degree-3 vertices joined by a path of three degree-2 U vertices
  Graph g(9);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(0, 5);
  g.add_edge(0, 6);
  g.add_edge(4, 7);
  g.add_edge(4, 8);
  AssignedGraph ag = AssignedGraph::all_u(g);
  std::vector<Thread> threads = find_threads(ag);
  bool found = false;
  for (const Thread& t : threads) {
    std::vector<int> internal = t.internal;
    std::array<int, 2> borders = t.borders;
    if (internal == std::vector<int>{3, 2, 1}) {
      std::reverse(internal.begin(), internal.end());
      std::swap(borders[0], borders[1]);
    }
    if (internal == std::vector<int>{1, 2, 3}) {
      found = true;
      CHECK_FALSE(t.closed);
      CHECK(borders[0] == 0);
      CHECK(borders[1] == 4);
    }
  }
  CHECK(found);
  CHECK(has_kind(detect_configurations(ag), ConfigKind::kC2));
}

TEST_CASE("sharpness units carry closed 2-threads and CL7") {
  AssignedGraph ag = AssignedGraph::all_u(sharpness_graph(3).result);
  std::vector<Thread> threads = find_threads(ag);
  int closed_pairs = 0;
  for (const Thread& t : threads) {
    if (t.closed) {
      ++closed_pairs;
      CHECK(t.length() == 2);
      CHECK(t.borders[0] == t.borders[1]);
    }
  }
  CHECK(closed_pairs == 3);
  std::vector<ConfigurationReport> configs = detect_configurations(ag);
  int cl7 = 0;
  for (const ConfigurationReport& c : configs) {
    if (c.kind == ConfigKind::kCl7) {
      ++cl7;
      CHECK((c.anchor == 3 || c.anchor == 6 || c.anchor == 9));
    }
  }
  CHECK(cl7 == 3);
}

TEST_CASE("dense regular graphs have no threads or configurations") {
  AssignedGraph ag = AssignedGraph::all_u(k4());
  CHECK(find_threads(ag).empty());
  CHECK(detect_configurations(ag).empty());
}

TEST_CASE("degenerate patterns are flagged, not treated as threads") {
  AssignedGraph lone = AssignedGraph::all_u(Graph(1));
  CHECK(has_kind(detect_configurations(lone), ConfigKind::kDegenerateIsolated));

  AssignedGraph ring = AssignedGraph::all_u(cycle(5));
  CHECK(find_threads(ring).empty());
  CHECK(has_kind(detect_configurations(ring), ConfigKind::kDegenerateAllUCycle));
  ChargeTrace trace = run_discharging(ring);
  for (int v = 0; v < 5; ++v) {
    CHECK(trace.mu_halves[static_cast<size_t>(v)][3] == -2);  // mu3 = -1
  }
}

TEST_CASE("leaf and low-degree configurations") {
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  std::vector<ConfigurationReport> configs =
      detect_configurations(AssignedGraph::all_u(path));
  CHECK(has_kind(configs, ConfigKind::kC1));

  AssignedGraph f_leaf{path, {VertexLabel::F, VertexLabel::U, VertexLabel::F}};
  configs = detect_configurations(f_leaf);
  CHECK(has_kind(configs, ConfigKind::kCl6DeleteLeaf));

  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  AssignedGraph f_mid{p3, {VertexLabel::U, VertexLabel::F, VertexLabel::U}};
  // ends are C1 as well; the middle F 2-vertex must be reported
  CHECK(has_kind(detect_configurations(f_mid), ConfigKind::kCl6Contract));
}

TEST_CASE("spider configurations C3 and CL8") {
  // center 0 with four open 2-threads ending in F borders
  Graph g(13);
  for (int i = 0; i < 4; ++i) {
    g.add_edge(0, 1 + 2 * i);
    g.add_edge(1 + 2 * i, 2 + 2 * i);
    g.add_edge(2 + 2 * i, 9 + i);
  }
  std::vector<VertexLabel> labels(13, VertexLabel::U);
  for (int i = 9; i < 13; ++i) labels[static_cast<size_t>(i)] = VertexLabel::F;
  AssignedGraph c3{g, labels};
  CHECK(has_kind(detect_configurations(c3), ConfigKind::kC3));

  // degree-3 center with three 1-threads whose far borders sit in F
  Graph h(7);
  for (int i = 0; i < 3; ++i) {
    h.add_edge(0, 1 + i);
    h.add_edge(1 + i, 4 + i);
  }
  std::vector<VertexLabel> hl(7, VertexLabel::U);
  for (int i = 4; i < 7; ++i) hl[static_cast<size_t>(i)] = VertexLabel::F;
  AssignedGraph cl8{h, hl};
  CHECK(has_kind(detect_configurations(cl8), ConfigKind::kCl8));
}

TEST_CASE("initial charges match the degree formula and sum to -rho") {
  Graph lone(1);
  AssignedGraph isolated_i{lone, {VertexLabel::I}};
  CHECK(initial_charge(isolated_i).mu_halves[0][0] == -2);  // mu0 = -1

  Graph star(4);
  for (int v = 1; v < 4; ++v) star.add_edge(0, v);
  AssignedGraph k13{star,
                    {VertexLabel::U, VertexLabel::I, VertexLabel::I, VertexLabel::I}};
  ChargeTrace trace = initial_charge(k13);
  CHECK(trace.mu_halves[0][0] == 2);  // 2*3 - 5
  CHECK(trace.mu_halves[1][0] == 2);  // 2*1 - 1
  CHECK(trace.stage_sum_halves(0) == -2 * whole_rho(k13));
  CHECK(whole_rho(k13) == -4);
}

TEST_CASE("rule run on the three-leaf star") {
  Graph star(4);
  for (int v = 1; v < 4; ++v) star.add_edge(0, v);
  AssignedGraph k13{star,
                    {VertexLabel::U, VertexLabel::I, VertexLabel::I, VertexLabel::I}};
  ChargeTrace trace = run_discharging(k13);
  CHECK(trace.mu_halves[0][3] == 8);  // center ends at 4
  for (int leaf = 1; leaf < 4; ++leaf) {
    CHECK(trace.mu_halves[static_cast<size_t>(leaf)][3] == 0);
  }
  CHECK(trace.transfers.size() == 3);
  for (const ChargeTransfer& t : trace.transfers) {
    CHECK(t.rule == 1);
    CHECK(t.amount_halves == 2);
  }
}

TEST_CASE("rule run on a sharpness unit") {
  AssignedGraph ag = AssignedGraph::all_u(sharpness_graph(3).result);
  ChargeTrace trace = run_discharging(ag);
  // per unit: cycle vertex 1, attachment vertex -1, triangle pair 0
  for (int v = 0; v < 3; ++v) {
    CHECK(trace.mu_halves[static_cast<size_t>(v)][3] == 2);
    int a = 3 + 3 * v;
    CHECK(trace.mu_halves[static_cast<size_t>(a)][3] == -2);
    CHECK(trace.mu_halves[static_cast<size_t>(a + 1)][3] == 0);
    CHECK(trace.mu_halves[static_cast<size_t>(a + 2)][3] == 0);
  }
  CHECK(trace.stage_sum_halves(3) == 0);  // rho = 0
}

TEST_CASE("lemma 8 audit on config-free and configured graphs") {
  AuditResult on_k4 = audit_lemma8(AssignedGraph::all_u(k4()));
  CHECK_FALSE(on_k4.vacuous);
  CHECK(on_k4.rho == -4);
  CHECK(on_k4.passed());

  AuditResult on_petersen = audit_lemma8(AssignedGraph::all_u(petersen()));
  CHECK_FALSE(on_petersen.vacuous);
  CHECK(on_petersen.rho == -10);
  CHECK(on_petersen.passed());

  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  AuditResult on_p3 = audit_lemma8(AssignedGraph::all_u(p3));
  CHECK(on_p3.vacuous);
  CHECK(on_p3.rho == 7);
  CHECK(on_p3.passed());
}

TEST_CASE("conservation holds on random instances at every stage") {
  for (int trial = 0; trial < 300; ++trial) {
    SplitMix64 rng(mix_seed(91, static_cast<std::uint64_t>(trial)));
    int n = 1 + static_cast<int>(rng.below(14));
    Graph g = sparse_near_threshold(n, Rational(5, 2), rng.next());
    AssignedGraph ag = random_assignment(std::move(g), rng.next());
    ChargeTrace trace = run_discharging(ag);
    long long target = -2 * whole_rho(ag);
    for (int stage = 0; stage < 4; ++stage) {
      REQUIRE(trace.stage_sum_halves(stage) == target);
    }
  }
}

TEST_CASE("positive potential forces a configuration on clean instances") {
  int positives = 0;
  for (int trial = 0; positives < 200 && trial < 4000; ++trial) {
    SplitMix64 rng(mix_seed(93, static_cast<std::uint64_t>(trial)));
    int n = 2 + static_cast<int>(rng.below(13));
    Graph g = sparse_near_threshold(n, Rational(5, 2), rng.next());
    AssignedGraph ag = random_assignment(std::move(g), rng.next());
    if (whole_rho(ag) <= 0) continue;
    std::vector<ConfigurationReport> configs = detect_configurations(ag);
    bool degenerate =
        has_kind(configs, ConfigKind::kDegenerateIsolated) ||
        has_kind(configs, ConfigKind::kDegenerateAllUCycle);
    if (degenerate) continue;
    ++positives;
    REQUIRE_FALSE(configs.empty());
  }
  CHECK(positives == 200);
}

TEST_CASE("low potential enumeration yields exactly the five known graphs") {
  std::vector<AssignedGraph> configs = enumerate_low_potential_configs();
  REQUIRE(configs.size() == 5);
  int with_edges = 0;
  for (const AssignedGraph& ag : configs) {
    CHECK(ag.vertex_count() + ag.graph.edge_count() <= 4);
    CHECK(brute_force_min_potential(ag).value >= 1);
    CHECK(whole_rho(ag) < 3);
    if (ag.graph.edge_count() > 0) ++with_edges;
  }
  CHECK(with_edges == 3);
}
