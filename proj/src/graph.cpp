#include "ifpart/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ifpart {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
  adj_.resize(static_cast<size_t>(vertex_count));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range [0, " +
                                std::to_string(vertex_count()) + ")");
  }
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edge_count_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& shorter = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(shorter.begin(), shorter.end(), target) != shorter.end();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(std::span<const int> verts,
                     std::vector<int>* to_original) const {
  std::vector<int> index(static_cast<size_t>(vertex_count()), -1);
  Graph sub(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) {
    check_vertex(verts[i]);
    if (index[static_cast<size_t>(verts[i])] != -1) {
      throw std::invalid_argument("duplicate vertex in induced-subgraph set");
    }
    index[static_cast<size_t>(verts[i])] = static_cast<int>(i);
  }
  for (size_t i = 0; i < verts.size(); ++i) {
    for (int w : adj_[static_cast<size_t>(verts[i])]) {
      int j = index[static_cast<size_t>(w)];
      if (j >= 0 && static_cast<int>(i) < j) sub.add_edge(static_cast<int>(i), j);
    }
  }
  if (to_original != nullptr) {
    to_original->assign(verts.begin(), verts.end());
  }
  return sub;
}

long long Graph::edges_within(std::span<const int> verts) const {
  std::vector<char> in(static_cast<size_t>(vertex_count()), 0);
  for (int v : verts) {
    check_vertex(v);
    in[static_cast<size_t>(v)] = 1;
  }
  long long count = 0;
  for (int v : verts) {
    for (int w : adj_[static_cast<size_t>(v)]) {
      if (v < w && in[static_cast<size_t>(w)]) ++count;
    }
  }
  return count;
}

bool Graph::operator==(const Graph& other) const {
  return vertex_count() == other.vertex_count() &&
         edge_count_ == other.edge_count_ && edges() == other.edges();
}

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxShortN = 62;
constexpr int kGraph6MaxN = 258047;

int g6_byte(std::string_view text, size_t pos) {
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: byte out of printable range", -1,
                     static_cast<long>(pos));
  }
  return c - kGraph6Bias;
}

GraphParseResult parse_graph6(std::string_view text) {
  // Trim a single trailing newline so files are acceptable verbatim.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("graph6: empty input", -1, 0);
  size_t pos = 0;
  if (text.substr(0, 2) == ">>") {
    // Optional ">>graph6<<" header.
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) != kHeader) {
      throw ParseError("graph6: malformed header", -1, 0);
    }
    pos = kHeader.size();
  }
  if (pos >= text.size()) throw ParseError("graph6: missing size byte", -1, static_cast<long>(pos));
  long long n;
  int first = g6_byte(text, pos);
  if (first <= kGraph6MaxShortN) {
    n = first;
    ++pos;
  } else if (first == 63) {
    if (pos + 3 >= text.size()) {
      throw ParseError("graph6: truncated extended size", -1, static_cast<long>(pos));
    }
    n = (static_cast<long long>(g6_byte(text, pos + 1)) << 12) |
        (static_cast<long long>(g6_byte(text, pos + 2)) << 6) |
        static_cast<long long>(g6_byte(text, pos + 3));
    if (n <= kGraph6MaxShortN || n > kGraph6MaxN) {
      throw ParseError("graph6: extended size out of supported range", -1,
                       static_cast<long>(pos));
    }
    pos += 4;
  } else {
    throw ParseError("graph6: unsupported size prefix", -1, static_cast<long>(pos));
  }

  long long bits = n * (n - 1) / 2;
  long long bytes_needed = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes_needed) {
    throw ParseError("graph6: body length mismatch (expected " +
                         std::to_string(bytes_needed) + " bytes, got " +
                         std::to_string(text.size() - pos) + ")",
                     -1, static_cast<long>(pos));
  }
  GraphParseResult result;
  result.graph = Graph(static_cast<int>(n));
  long long bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      size_t byte_index = pos + static_cast<size_t>(bit / 6);
      int value = g6_byte(text, byte_index);
      if ((value >> (5 - bit % 6)) & 1) {
        result.graph.add_edge(row, col);
      }
    }
  }
  // Padding bits must be zero.
  for (; bit < bytes_needed * 6; ++bit) {
    size_t byte_index = pos + static_cast<size_t>(bit / 6);
    if ((g6_byte(text, byte_index) >> (5 - bit % 6)) & 1) {
      throw ParseError("graph6: nonzero padding bit", -1,
                       static_cast<long>(byte_index));
    }
  }
  return result;
}

GraphParseResult parse_edge_list(std::string_view text) {
  GraphParseResult result;
  struct RawEdge {
    int u, v;
    long line;
  };
  std::vector<RawEdge> raw;
  long pinned_n = -1;
  int max_vertex = -1;
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
    if (hash != std::string_view::npos) {
      // "# n COUNT" pins the vertex count.
      std::istringstream comment{std::string(line.substr(hash + 1))};
      std::string tag;
      long long count;
      if (comment >> tag >> count && tag == "n") {
        if (count < 0) throw ParseError("edge list: negative vertex count", line_no);
        pinned_n = static_cast<long>(count);
      }
      line = line.substr(0, hash);
    }
    std::istringstream fields{std::string(line)};
    long long u, v;
    if (!(fields >> u)) {
      if (line.find_first_not_of(" \t") != std::string_view::npos) {
        throw ParseError("edge list: expected a vertex id", line_no);
      }
      continue;  // blank line
    }
    if (!(fields >> v)) {
      throw ParseError("edge list: expected two vertex ids", line_no);
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("edge list: trailing token '" + extra + "'", line_no);
    }
    if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id", line_no);
    if (u == v) {
      throw ParseError("edge list: self-loop at vertex " + std::to_string(u),
                       line_no);
    }
    raw.push_back({static_cast<int>(u), static_cast<int>(v), line_no});
    max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
  }
  int n = max_vertex + 1;
  if (pinned_n >= 0) {
    if (pinned_n < n) {
      throw ParseError("edge list: pinned vertex count " +
                       std::to_string(pinned_n) + " smaller than max index");
    }
    n = static_cast<int>(pinned_n);
  }
  result.graph = Graph(n);
  for (const RawEdge& e : raw) {
    if (!result.graph.add_edge(e.u, e.v)) {
      result.warnings.push_back("line " + std::to_string(e.line) +
                                ": duplicate edge " + std::to_string(e.u) + " " +
                                std::to_string(e.v) + " collapsed");
    }
  }
  return result;
}

}  // namespace

GraphParseResult parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6:
      return parse_graph6(text);
    case GraphFormat::kEdgeList:
      return parse_edge_list(text);
  }
  throw std::invalid_argument("unknown graph format");
}

std::string to_graph6(const Graph& g) {
  long long n = g.vertex_count();
  if (n > kGraph6MaxN) {
    throw std::invalid_argument("graph6: more than 258047 vertices unsupported");
  }
  std::string out;
  if (n <= kGraph6MaxShortN) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>((n & 63) + kGraph6Bias));
  }
  int accum = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      accum = (accum << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(accum + kGraph6Bias));
        accum = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    accum <<= (6 - filled);
    out.push_back(static_cast<char>(accum + kGraph6Bias));
  }
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "# n " + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace ifpart
