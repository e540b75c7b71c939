#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ifpart/graph.hpp"

namespace ifpart {

/// Preassignment tag: I = must join the 2-independent side, F = must join the
/// forest side, U = free.
enum class VertexLabel : char { I = 'I', F = 'F', U = 'U' };

char label_letter(VertexLabel label);
VertexLabel label_from_letter(char letter);

/// A graph together with a total vertex labeling into I / F / U.
struct AssignedGraph {
  Graph graph;
  std::vector<VertexLabel> labels;

  static AssignedGraph all_u(Graph g);

  int vertex_count() const { return graph.vertex_count(); }
  VertexLabel label(int v) const { return labels.at(static_cast<size_t>(v)); }

  std::vector<int> vertices_with(VertexLabel label) const;

  /// Throws std::invalid_argument unless labels cover V(G) exactly.
  void validate() const;
};

struct AssignmentParseResult {
  AssignedGraph assigned;
  std::vector<std::string> warnings;
};

/// Parses "v L" lines (L in {I, F, U}); unlisted vertices default to U.
/// Warns when two I-labeled vertices are adjacent or share a neighbor, which
/// guarantees a nonpositive-potential subgraph.
AssignmentParseResult parse_assignment(std::string_view text, Graph g);

std::string to_assignment_text(const AssignedGraph& ag);

}  // namespace ifpart
