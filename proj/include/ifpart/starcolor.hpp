#pragma once

#include <string>
#include <vector>

#include "ifpart/graph.hpp"
#include "ifpart/partition.hpp"

namespace ifpart {

/// Total coloring, colors are positive integers starting at 1.
struct StarColoring {
  std::vector<int> colors;
};

struct ColoringResult {
  StarColoring coloring;
  int colors_used;
};

struct StarViolation {
  enum class Kind {
    kImproperEdge,  // adjacent vertices share a color
    kBicoloredP4,   // 4-vertex path on two colors
  };
  Kind kind;
  std::vector<int> vertices;
  std::string detail;
};

/// Accepts iff the coloring is proper and no 4-vertex path is 2-colored.
/// Throws std::invalid_argument on a partial coloring.
std::vector<StarViolation> verify_star_coloring(const Graph& g,
                                                const StarColoring& c);

/// Reference check against the direct definition: the union of every color
/// pair must induce a star forest (each component a star). Cross-validated
/// against verify_star_coloring in the test suite.
bool star_forest_pairs_check(const Graph& g, const StarColoring& c);

/// Star 3-coloring of a forest: each tree rooted at its lowest-indexed
/// vertex, color = depth mod 3 + 1. Throws std::invalid_argument on a cycle.
ColoringResult star_color_forest(const Graph& g);

/// Star <= 4-coloring from a valid partition: forest side colored {1,2,3},
/// independent side colored 4. Throws std::invalid_argument if the partition
/// is invalid for g.
ColoringResult star_coloring_from_partition(const Graph& g, const Partition& p);

/// Exact star chromatic number by backtracking with incremental bicolored-P4
/// pruning. Throws std::invalid_argument if n exceeds `vertex_cap`.
ColoringResult star_chromatic_number(const Graph& g, int vertex_cap = 12);

}  // namespace ifpart
