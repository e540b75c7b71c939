#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ifpart {

/// Error thrown by the text parsers. Carries a position (1-based line for
/// line-oriented formats, 0-based byte offset for graph6) when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, long line = -1, long byte_offset = -1)
      : std::runtime_error(std::move(message)), line_(line), byte_(byte_offset) {}

  long line() const { return line_; }
  long byte_offset() const { return byte_; }

 private:
  long line_;
  long byte_;
};

/// Simple undirected graph over dense 0-indexed vertices.
/// No self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }

  /// Adds the edge {u, v}. Throws std::invalid_argument on a self-loop or an
  /// out-of-range endpoint. Returns false if the edge was already present.
  bool add_edge(int u, int v);

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Induced subgraph on `verts` (need not be sorted; duplicates rejected).
  /// If `to_original` is non-null it receives new-index -> original-index.
  Graph induced(std::span<const int> verts,
                std::vector<int>* to_original = nullptr) const;

  /// Number of edges with both endpoints inside `verts`.
  long long edges_within(std::span<const int> verts) const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  long long edge_count_ = 0;
};

enum class GraphFormat { kGraph6, kEdgeList };

struct GraphParseResult {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Parses `text` in the given format. Edge lists are lines "u v" with
/// optional '#' comments; a "# n COUNT" comment pins the vertex count so
/// trailing isolated vertices survive a round trip. Duplicate edges collapse
/// with a warning. graph6 follows the published byte encoding for both the
/// short (n <= 62) and the three-byte (63 <= n <= 258047) headers.
GraphParseResult parse_graph(std::string_view text, GraphFormat format);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace ifpart
