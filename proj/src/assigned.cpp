#include "ifpart/assigned.hpp"

#include <sstream>

namespace ifpart {

char label_letter(VertexLabel label) { return static_cast<char>(label); }

VertexLabel label_from_letter(char letter) {
  switch (letter) {
    case 'I':
      return VertexLabel::I;
    case 'F':
      return VertexLabel::F;
    case 'U':
      return VertexLabel::U;
    default:
      throw std::invalid_argument(std::string("unknown label letter '") +
                                  letter + "'");
  }
}

AssignedGraph AssignedGraph::all_u(Graph g) {
  AssignedGraph ag;
  ag.labels.assign(static_cast<size_t>(g.vertex_count()), VertexLabel::U);
  ag.graph = std::move(g);
  return ag;
}

std::vector<int> AssignedGraph::vertices_with(VertexLabel target) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (label(v) == target) out.push_back(v);
  }
  return out;
}

void AssignedGraph::validate() const {
  if (static_cast<int>(labels.size()) != graph.vertex_count()) {
    throw std::invalid_argument("labeling does not cover the vertex set");
  }
}

AssignmentParseResult parse_assignment(std::string_view text, Graph g) {
  AssignmentParseResult result;
  result.assigned = AssignedGraph::all_u(std::move(g));
  const Graph& graph = result.assigned.graph;
  long line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream fields{std::string(line)};
    long long v;
    std::string tag;
    if (!(fields >> v)) continue;
    if (!(fields >> tag) || tag.size() != 1) {
      throw ParseError("assignment: expected 'v L' with L in {I,F,U}", line_no);
    }
    if (v < 0 || v >= graph.vertex_count()) {
      throw ParseError("assignment: vertex " + std::to_string(v) +
                           " out of range",
                       line_no);
    }
    VertexLabel label;
    try {
      label = label_from_letter(tag[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("assignment: ") + e.what(), line_no);
    }
    result.assigned.labels[static_cast<size_t>(v)] = label;
  }

  // Two I vertices adjacent or sharing a neighbor force a nonpositive
  // potential subgraph; legal input, but worth flagging.
  std::vector<int> iverts = result.assigned.vertices_with(VertexLabel::I);
  for (size_t a = 0; a < iverts.size(); ++a) {
    for (size_t b = a + 1; b < iverts.size(); ++b) {
      int u = iverts[a], v = iverts[b];
      if (graph.has_edge(u, v)) {
        result.warnings.push_back("I vertices " + std::to_string(u) + " and " +
                                  std::to_string(v) + " are adjacent");
        continue;
      }
      for (int w : graph.neighbors(u)) {
        if (graph.has_edge(w, v)) {
          result.warnings.push_back("I vertices " + std::to_string(u) + " and " +
                                    std::to_string(v) +
                                    " share the neighbor " + std::to_string(w));
          break;
        }
      }
    }
  }
  return result;
}

std::string to_assignment_text(const AssignedGraph& ag) {
  std::string out;
  for (int v = 0; v < ag.vertex_count(); ++v) {
    if (ag.label(v) != VertexLabel::U) {
      out += std::to_string(v) + " " + label_letter(ag.label(v)) + "\n";
    }
  }
  return out;
}

}  // namespace ifpart
