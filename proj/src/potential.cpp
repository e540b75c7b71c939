#include "ifpart/potential.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ifpart/maxflow.hpp"

namespace ifpart {

int potential_weight(VertexLabel label) {
  switch (label) {
    case VertexLabel::I:
      return 1;
    case VertexLabel::F:
      return 4;
    case VertexLabel::U:
      return 5;
  }
  throw std::logic_error("unreachable label");
}

Rational mad_threshold() { return Rational(5, 2); }

long long potential(const AssignedGraph& ag, std::span<const int> subset) {
  ag.validate();
  std::vector<char> seen(static_cast<size_t>(ag.vertex_count()), 0);
  long long vertex_weight = 0;
  for (int v : subset) {
    if (v < 0 || v >= ag.vertex_count()) {
      throw std::invalid_argument("potential: vertex " + std::to_string(v) +
                                  " out of range");
    }
    if (seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("potential: duplicate vertex " +
                                  std::to_string(v));
    }
    seen[static_cast<size_t>(v)] = 1;
    vertex_weight += potential_weight(ag.label(v));
  }
  return vertex_weight - kPotentialEdgeWeight * ag.graph.edges_within(subset);
}

namespace {

// Shared selection network: source -> one node per edge (capacity
// `edge_gain`), edge node -> both endpoint nodes (effectively unbounded),
// vertex node -> sink (the vertex's cost; `skip_sink_vertex` gets none).
// Returns max over "closed" S of edge_gain*E(S) - cost(S) and the canonical
// maximizing vertex set.
struct SelectionSolution {
  long long best;  // max of the selection objective
  std::vector<int> vertices;
};

SelectionSolution solve_selection(const Graph& g, long long edge_gain,
                                  const std::vector<long long>& vertex_cost,
                                  int skip_sink_vertex = -1) {
  int n = g.vertex_count();
  auto edge_list = g.edges();
  long long m = static_cast<long long>(edge_list.size());
  int source = 0;
  int sink = static_cast<int>(m) + n + 1;
  long long total_cost = std::accumulate(vertex_cost.begin(), vertex_cost.end(), 0LL);
  long long unbounded = edge_gain * m + total_cost + 1;
  MaxFlow net(sink + 1);
  for (long long i = 0; i < m; ++i) {
    net.add_arc(source, static_cast<int>(1 + i), edge_gain);
    net.add_arc(static_cast<int>(1 + i),
                static_cast<int>(m) + 1 + edge_list[static_cast<size_t>(i)].first,
                unbounded);
    net.add_arc(static_cast<int>(1 + i),
                static_cast<int>(m) + 1 + edge_list[static_cast<size_t>(i)].second,
                unbounded);
  }
  for (int v = 0; v < n; ++v) {
    if (v == skip_sink_vertex) continue;
    if (vertex_cost[static_cast<size_t>(v)] > 0) {
      net.add_arc(static_cast<int>(m) + 1 + v, sink,
                  vertex_cost[static_cast<size_t>(v)]);
    }
  }
  long long flow = net.solve(source, sink);
  SelectionSolution solution;
  solution.best = edge_gain * m - flow;
  std::vector<char> reachable = net.min_cut_source_side(source);
  for (int v = 0; v < n; ++v) {
    if (reachable[static_cast<size_t>(static_cast<int>(m) + 1 + v)]) {
      solution.vertices.push_back(v);
    }
  }
  return solution;
}

}  // namespace

PotentialWitness min_potential(const AssignedGraph& ag) {
  ag.validate();
  int n = ag.vertex_count();
  if (n == 0) throw std::invalid_argument("min_potential: empty graph");
  std::vector<long long> cost(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    cost[static_cast<size_t>(v)] = potential_weight(ag.label(v));
  }
  bool have_best = false;
  PotentialWitness best{};
  // Nonemptiness: one solve per forced witness vertex.
  for (int forced = 0; forced < n; ++forced) {
    SelectionSolution sel = solve_selection(ag.graph, kPotentialEdgeWeight, cost, forced);
    std::vector<int> subset = sel.vertices;
    if (!std::binary_search(subset.begin(), subset.end(), forced)) {
      subset.insert(std::lower_bound(subset.begin(), subset.end(), forced), forced);
    }
    long long value = cost[static_cast<size_t>(forced)] - sel.best;
    long long recomputed = potential(ag, subset);
    if (recomputed != value) {
      throw std::logic_error("min_potential: witness value mismatch");
    }
    if (!have_best || value < best.value ||
        (value == best.value && subset < best.vertices)) {
      have_best = true;
      best = {std::move(subset), value};
    }
  }
  return best;
}

PotentialWitness brute_force_min_potential(const AssignedGraph& ag, int cap) {
  ag.validate();
  int n = ag.vertex_count();
  if (n == 0) throw std::invalid_argument("brute_force_min_potential: empty graph");
  if (n > cap) {
    throw std::invalid_argument("brute_force_min_potential: vertex count " +
                                std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  }
  std::vector<uint64_t> nbr_mask(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int w : ag.graph.neighbors(v)) {
      nbr_mask[static_cast<size_t>(v)] |= uint64_t{1} << w;
    }
  }
  bool have_best = false;
  long long best_value = 0;
  uint64_t best_mask = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    long long value = 0;
    for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      value += potential_weight(ag.label(v));
      value -= kPotentialEdgeWeight *
               std::popcount(nbr_mask[static_cast<size_t>(v)] & mask &
                             ((uint64_t{1} << v) - 1));
    }
    if (!have_best || value < best_value) {
      have_best = true;
      best_value = value;
      best_mask = mask;
    }
  }
  PotentialWitness best;
  best.value = best_value;
  for (int v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1) best.vertices.push_back(v);
  }
  return best;
}

bool all_potentials_positive(const AssignedGraph& ag) {
  return min_potential(ag).value >= 1;
}

namespace {

Rational subset_density(const Graph& g, std::span<const int> subset) {
  return Rational(2 * g.edges_within(subset), static_cast<long long>(subset.size()));
}

}  // namespace

DensityWitness mad(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mad: empty graph");
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  if (g.edge_count() == 0) {
    return {std::move(all), Rational(0)};
  }
  std::vector<int> witness = all;
  Rational density = subset_density(g, witness);
  // Each round asks, exactly, whether some subset beats the current
  // candidate density p/q: max over S of 2q|E(S)| - p|S| positive. The
  // maximizer strictly improves the candidate; densities form a finite
  // strictly increasing chain, so this terminates at the optimum.
  for (;;) {
    long long p = density.numerator();
    long long q = density.denominator();
    std::vector<long long> cost(static_cast<size_t>(n), p);
    SelectionSolution sel = solve_selection(g, 2 * q, cost);
    if (sel.best <= 0 || sel.vertices.empty()) {
      return {std::move(witness), density};
    }
    witness = sel.vertices;
    Rational improved = subset_density(g, witness);
    if (improved <= density) {
      throw std::logic_error("mad: density failed to improve");
    }
    density = improved;
  }
}

DensityWitness brute_force_mad(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("brute_force_mad: empty graph");
  if (n > cap) {
    throw std::invalid_argument("brute_force_mad: vertex count " +
                                std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  }
  std::vector<uint64_t> nbr_mask(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) {
      nbr_mask[static_cast<size_t>(v)] |= uint64_t{1} << w;
    }
  }
  long long best_edges = -1, best_size = 1;
  uint64_t best_mask = 1;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    long long edges = 0;
    for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      edges += std::popcount(nbr_mask[static_cast<size_t>(v)] & mask &
                             ((uint64_t{1} << v) - 1));
    }
    long long size = std::popcount(mask);
    if (best_edges < 0 || edges * best_size > best_edges * size) {
      best_edges = edges;
      best_size = size;
      best_mask = mask;
    }
  }
  DensityWitness best;
  best.value = Rational(2 * best_edges, best_size);
  for (int v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1) best.vertices.push_back(v);
  }
  return best;
}

Rational sparsity_fraction(const AssignedGraph& ag, std::span<const int> subset) {
  ag.validate();
  if (subset.empty()) {
    throw std::invalid_argument("sparsity_fraction: empty subset");
  }
  long long i_count = 0, f_count = 0, u_count = 0;
  std::vector<char> seen(static_cast<size_t>(ag.vertex_count()), 0);
  for (int v : subset) {
    if (v < 0 || v >= ag.vertex_count()) {
      throw std::invalid_argument("sparsity_fraction: vertex out of range");
    }
    if (seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("sparsity_fraction: duplicate vertex");
    }
    seen[static_cast<size_t>(v)] = 1;
    switch (ag.label(v)) {
      case VertexLabel::I:
        ++i_count;
        break;
      case VertexLabel::F:
        ++f_count;
        break;
      case VertexLabel::U:
        ++u_count;
        break;
    }
  }
  long long edges = ag.graph.edges_within(subset);
  return Rational(2 * edges + 22 * i_count + 8 * f_count,
                  u_count + 9 * i_count + 4 * f_count);
}

Rational girth_mad_bound(int girth) {
  if (girth < 3) throw std::invalid_argument("girth must be at least 3");
  return Rational(2LL * girth, girth - 2);
}

}  // namespace ifpart
