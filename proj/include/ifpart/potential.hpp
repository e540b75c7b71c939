#pragma once

#include <boost/rational.hpp>
#include <span>
#include <vector>

#include "ifpart/assigned.hpp"

namespace ifpart {

using Rational = boost::rational<long long>;

/// Vertex weights of the potential function: 1 for I, 4 for F, 5 for U.
int potential_weight(VertexLabel label);

/// Potential cost per edge.
inline constexpr long long kPotentialEdgeWeight = 4;

/// The forest-partition density threshold 5/2.
Rational mad_threshold();

/// rho(S) = |I(S)| + 4|F(S)| + 5|U(S)| - 4|E(G[S])| on the induced subgraph.
long long potential(const AssignedGraph& ag, std::span<const int> subset);

struct PotentialWitness {
  std::vector<int> vertices;  // sorted, nonempty
  long long value;
};

struct DensityWitness {
  std::vector<int> vertices;  // sorted, nonempty
  Rational value;
};

/// Minimum of rho over all nonempty vertex subsets, with a minimizing
/// witness, via a project-selection min-cut per candidate forced vertex.
/// Ties break toward the lexicographically smallest witness vertex set.
/// Throws std::invalid_argument on an empty graph.
PotentialWitness min_potential(const AssignedGraph& ag);

/// Exhaustive reference for min_potential; throws if n exceeds `cap`.
PotentialWitness brute_force_min_potential(const AssignedGraph& ag, int cap = 20);

/// True iff every nonempty subset has rho >= 1.
bool all_potentials_positive(const AssignedGraph& ag);

/// Maximum average degree max over nonempty S of 2|E(S)|/|S|, exact, with a
/// maximizing witness. Density improvement iterations over the selection
/// network, each step an exact min-cut decision at the current candidate
/// rational. Throws std::invalid_argument on an empty graph.
DensityWitness mad(const Graph& g);

/// Exhaustive reference for mad; throws if n exceeds `cap`.
DensityWitness brute_force_mad(const Graph& g, int cap = 16);

/// (2|E| + 22|I| + 8|F|) / (|U| + 9|I| + 4|F|) on G[s]; the arithmetic
/// equivalent of the potential sign test: rho(S) > 0 iff this is < 5/2.
Rational sparsity_fraction(const AssignedGraph& ag, std::span<const int> subset);

/// 2g/(g-2), the maximum-average-degree bound for planar graphs of girth g.
Rational girth_mad_bound(int girth);

}  // namespace ifpart
