#include "ifpart/starcolor.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "ifpart/assigned.hpp"
#include "ifpart/partition.hpp"

namespace ifpart {

namespace {

// All paths on 4 distinct vertices, each once (smaller endpoint first).
std::vector<std::array<int, 4>> enumerate_p4s(const Graph& g) {
  std::vector<std::array<int, 4>> paths;
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b : g.neighbors(a)) {
      for (int c : g.neighbors(b)) {
        if (c == a) continue;
        for (int d : g.neighbors(c)) {
          if (d == b || d == a) continue;
          if (a < d) paths.push_back({a, b, c, d});
        }
      }
    }
  }
  return paths;
}

}  // namespace

std::vector<StarViolation> verify_star_coloring(const Graph& g,
                                                const StarColoring& c) {
  int n = g.vertex_count();
  if (static_cast<int>(c.colors.size()) != n) {
    throw std::invalid_argument("coloring does not cover the vertex set");
  }
  for (int v = 0; v < n; ++v) {
    if (c.colors[static_cast<size_t>(v)] < 1) {
      throw std::invalid_argument("colors must be positive integers");
    }
  }
  std::vector<StarViolation> violations;
  for (auto [u, v] : g.edges()) {
    if (c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)]) {
      violations.push_back({StarViolation::Kind::kImproperEdge,
                            {u, v},
                            "adjacent vertices " + std::to_string(u) + " and " +
                                std::to_string(v) + " share color " +
                                std::to_string(c.colors[static_cast<size_t>(u)])});
    }
  }
  for (const auto& path : enumerate_p4s(g)) {
    int c0 = c.colors[static_cast<size_t>(path[0])];
    int c1 = c.colors[static_cast<size_t>(path[1])];
    if (c.colors[static_cast<size_t>(path[2])] == c0 &&
        c.colors[static_cast<size_t>(path[3])] == c1) {
      violations.push_back(
          {StarViolation::Kind::kBicoloredP4,
           {path[0], path[1], path[2], path[3]},
           "path " + std::to_string(path[0]) + "-" + std::to_string(path[1]) +
               "-" + std::to_string(path[2]) + "-" + std::to_string(path[3]) +
               " uses only colors " + std::to_string(c0) + " and " +
               std::to_string(c1)});
    }
  }
  return violations;
}

bool star_forest_pairs_check(const Graph& g, const StarColoring& c) {
  int n = g.vertex_count();
  if (static_cast<int>(c.colors.size()) != n) {
    throw std::invalid_argument("coloring does not cover the vertex set");
  }
  for (auto [u, v] : g.edges()) {
    if (c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)]) {
      return false;
    }
  }
  int max_color = 0;
  for (int color : c.colors) max_color = std::max(max_color, color);
  for (int a = 1; a <= max_color; ++a) {
    for (int b = a + 1; b <= max_color; ++b) {
      std::vector<int> members;
      for (int v = 0; v < n; ++v) {
        int color = c.colors[static_cast<size_t>(v)];
        if (color == a || color == b) members.push_back(v);
      }
      Graph sub = g.induced(members);
      // Star components: acyclic with at most one branching vertex each,
      // equivalently every edge has an endpoint of degree 1... precisely:
      // a component is a star iff it has no path on 4 vertices and no cycle.
      // Check per component: edges = vertices - 1 and at most one vertex of
      // degree >= 2.
      int sn = sub.vertex_count();
      std::vector<int> comp(static_cast<size_t>(sn), -1);
      int comp_count = 0;
      for (int s = 0; s < sn; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        std::queue<int> queue;
        comp[static_cast<size_t>(s)] = comp_count;
        queue.push(s);
        while (!queue.empty()) {
          int v = queue.front();
          queue.pop();
          for (int w : sub.neighbors(v)) {
            if (comp[static_cast<size_t>(w)] == -1) {
              comp[static_cast<size_t>(w)] = comp_count;
              queue.push(w);
            }
          }
        }
        ++comp_count;
      }
      std::vector<int> comp_vertices(static_cast<size_t>(comp_count), 0);
      std::vector<int> comp_edges(static_cast<size_t>(comp_count), 0);
      std::vector<int> comp_branching(static_cast<size_t>(comp_count), 0);
      for (int v = 0; v < sn; ++v) {
        int k = comp[static_cast<size_t>(v)];
        ++comp_vertices[static_cast<size_t>(k)];
        if (sub.degree(v) >= 2) ++comp_branching[static_cast<size_t>(k)];
      }
      for (auto [u, v] : sub.edges()) {
        ++comp_edges[static_cast<size_t>(comp[static_cast<size_t>(u)])];
      }
      for (int k = 0; k < comp_count; ++k) {
        if (comp_edges[static_cast<size_t>(k)] !=
                comp_vertices[static_cast<size_t>(k)] - 1 ||
            comp_branching[static_cast<size_t>(k)] > 1) {
          return false;
        }
      }
    }
  }
  return true;
}

ColoringResult star_color_forest(const Graph& g) {
  int n = g.vertex_count();
  ColoringResult result;
  result.coloring.colors.assign(static_cast<size_t>(n), 0);
  result.colors_used = 0;
  for (int root = 0; root < n; ++root) {
    if (result.coloring.colors[static_cast<size_t>(root)] != 0) continue;
    // BFS by depth from the lowest-indexed vertex of each tree.
    std::queue<std::pair<int, int>> queue;  // (vertex, depth)
    std::vector<int> parent(1, -1);
    std::vector<int> parent_of(static_cast<size_t>(n), -1);
    result.coloring.colors[static_cast<size_t>(root)] = 1;
    result.colors_used = std::max(result.colors_used, 1);
    queue.push({root, 0});
    parent_of[static_cast<size_t>(root)] = root;
    while (!queue.empty()) {
      auto [v, depth] = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (parent_of[static_cast<size_t>(w)] == -1) {
          parent_of[static_cast<size_t>(w)] = v;
          int color = (depth + 1) % 3 + 1;
          result.coloring.colors[static_cast<size_t>(w)] = color;
          result.colors_used = std::max(result.colors_used, color);
          queue.push({w, depth + 1});
        } else if (w != parent_of[static_cast<size_t>(v)] || w == v) {
          throw std::invalid_argument("star_color_forest: input has a cycle");
        }
      }
    }
  }
  return result;
}

ColoringResult star_coloring_from_partition(const Graph& g, const Partition& p) {
  AssignedGraph all_u = AssignedGraph::all_u(g);
  std::vector<Violation> violations = verify_if_partition(all_u, p);
  if (!violations.empty()) {
    throw std::invalid_argument("star_coloring_from_partition: " +
                                violations.front().detail);
  }
  std::vector<int> to_original;
  Graph forest = g.induced(p.forest, &to_original);
  ColoringResult forest_coloring = star_color_forest(forest);
  ColoringResult result;
  result.coloring.colors.assign(static_cast<size_t>(g.vertex_count()), 0);
  for (size_t i = 0; i < to_original.size(); ++i) {
    result.coloring.colors[static_cast<size_t>(to_original[i])] =
        forest_coloring.coloring.colors[i];
  }
  result.colors_used = forest_coloring.colors_used;
  for (int v : p.independent) {
    result.coloring.colors[static_cast<size_t>(v)] = 4;
    result.colors_used = 4;
  }
  return result;
}

namespace {

class StarColorSearch {
 public:
  explicit StarColorSearch(const Graph& g)
      : graph_(g), paths_(enumerate_p4s(g)),
        paths_at_(static_cast<size_t>(g.vertex_count())),
        colors_(static_cast<size_t>(g.vertex_count()), 0) {
    for (size_t i = 0; i < paths_.size(); ++i) {
      for (int v : paths_[i]) {
        paths_at_[static_cast<size_t>(v)].push_back(i);
      }
    }
    // High-degree vertices first: they constrain the most.
    order_.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) order_[static_cast<size_t>(v)] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(a) > g.degree(b);
    });
  }

  bool try_k(int k) {
    max_colors_ = k;
    return place(0);
  }

  std::vector<int> colors() const { return colors_; }

 private:
  bool place(size_t position) {
    if (position == order_.size()) return true;
    int v = order_[position];
    int used_so_far = 0;
    for (size_t i = 0; i < position; ++i) {
      used_so_far = std::max(used_so_far, colors_[static_cast<size_t>(order_[i])]);
    }
    int limit = std::min(max_colors_, used_so_far + 1);  // symmetry breaking
    for (int color = 1; color <= limit; ++color) {
      colors_[static_cast<size_t>(v)] = color;
      if (consistent(v) && place(position + 1)) return true;
      colors_[static_cast<size_t>(v)] = 0;
    }
    return false;
  }

  bool consistent(int v) const {
    for (int w : graph_.neighbors(v)) {
      if (colors_[static_cast<size_t>(w)] == colors_[static_cast<size_t>(v)]) {
        return false;
      }
    }
    for (size_t index : paths_at_[static_cast<size_t>(v)]) {
      const auto& path = paths_[index];
      int c0 = colors_[static_cast<size_t>(path[0])];
      int c1 = colors_[static_cast<size_t>(path[1])];
      int c2 = colors_[static_cast<size_t>(path[2])];
      int c3 = colors_[static_cast<size_t>(path[3])];
      if (c0 == 0 || c1 == 0 || c2 == 0 || c3 == 0) continue;
      if (c2 == c0 && c3 == c1) return false;
    }
    return true;
  }

  const Graph& graph_;
  std::vector<std::array<int, 4>> paths_;
  std::vector<std::vector<size_t>> paths_at_;
  std::vector<int> colors_;
  std::vector<int> order_;
  int max_colors_ = 0;
};

}  // namespace

ColoringResult star_chromatic_number(const Graph& g, int vertex_cap) {
  int n = g.vertex_count();
  if (n > vertex_cap) {
    throw std::invalid_argument("star_chromatic_number: vertex count " +
                                std::to_string(n) + " exceeds cap " +
                                std::to_string(vertex_cap));
  }
  if (n == 0) return {StarColoring{}, 0};
  StarColorSearch search(g);
  for (int k = 1; k <= n; ++k) {
    if (search.try_k(k)) {
      std::vector<int> colors = search.colors();
      int used = *std::max_element(colors.begin(), colors.end());
      return {StarColoring{std::move(colors)}, used};
    }
  }
  throw std::logic_error("star_chromatic_number: no coloring found");
}

}  // namespace ifpart
