#include "ifpart/partition.hpp"

#include <algorithm>
#include <queue>

namespace ifpart {

Partition Partition::from_mask(const std::vector<bool>& in_independent) {
  Partition p;
  for (size_t v = 0; v < in_independent.size(); ++v) {
    (in_independent[v] ? p.independent : p.forest).push_back(static_cast<int>(v));
  }
  return p;
}

namespace {

// Finds a cycle among forest-side vertices by walking parent pointers once a
// non-tree edge shows up during BFS over the induced subgraph.
std::vector<int> find_forest_cycle(const Graph& g, const std::vector<char>& in_forest) {
  int n = g.vertex_count();
  std::vector<int> parent(static_cast<size_t>(n), -2);
  for (int root = 0; root < n; ++root) {
    if (!in_forest[static_cast<size_t>(root)] || parent[static_cast<size_t>(root)] != -2) {
      continue;
    }
    std::queue<int> queue;
    parent[static_cast<size_t>(root)] = -1;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        if (!in_forest[static_cast<size_t>(w)]) continue;
        if (parent[static_cast<size_t>(w)] == -2) {
          parent[static_cast<size_t>(w)] = v;
          queue.push(w);
        } else if (w != parent[static_cast<size_t>(v)]) {
          // Edge {v, w} closes a cycle: join the two tree paths.
          std::vector<int> path_v, path_w;
          for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) path_v.push_back(x);
          for (int x = w; x != -1; x = parent[static_cast<size_t>(x)]) path_w.push_back(x);
          // Drop the shared tail above the lowest common ancestor.
          while (path_v.size() >= 2 && path_w.size() >= 2 &&
                 path_v[path_v.size() - 1] == path_w[path_w.size() - 1] &&
                 path_v[path_v.size() - 2] == path_w[path_w.size() - 2]) {
            path_v.pop_back();
            path_w.pop_back();
          }
          std::vector<int> cycle(path_v.begin(), path_v.end());
          cycle.insert(cycle.end(), path_w.rbegin() + 1, path_w.rend());
          return cycle;
        }
      }
    }
  }
  return {};
}

}  // namespace

std::vector<Violation> verify_if_partition(const AssignedGraph& ag,
                                           const Partition& p) {
  ag.validate();
  const Graph& g = ag.graph;
  int n = g.vertex_count();
  std::vector<int> side(static_cast<size_t>(n), -1);  // 0 = independent, 1 = forest
  auto place = [&](const std::vector<int>& verts, int which) {
    for (int v : verts) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("partition vertex " + std::to_string(v) +
                                    " out of range");
      }
      if (side[static_cast<size_t>(v)] != -1) {
        throw std::invalid_argument("partition lists vertex " +
                                    std::to_string(v) + " twice");
      }
      side[static_cast<size_t>(v)] = which;
    }
  };
  place(p.independent, 0);
  place(p.forest, 1);
  for (int v = 0; v < n; ++v) {
    if (side[static_cast<size_t>(v)] == -1) {
      throw std::invalid_argument("partition misses vertex " + std::to_string(v));
    }
  }

  std::vector<Violation> violations;

  for (int v = 0; v < n; ++v) {
    VertexLabel label = ag.label(v);
    bool on_independent = side[static_cast<size_t>(v)] == 0;
    if ((label == VertexLabel::I && !on_independent) ||
        (label == VertexLabel::F && on_independent)) {
      violations.push_back(
          {Violation::Kind::kExtensionBreach,
           {v},
           "vertex " + std::to_string(v) + " labeled " +
               label_letter(label) + " landed on the wrong side"});
    }
  }

  // 2-independence via closed 2-neighborhoods.
  for (int u : p.independent) {
    for (int w : g.neighbors(u)) {
      if (side[static_cast<size_t>(w)] == 0 && u < w) {
        violations.push_back({Violation::Kind::kDistance2Conflict,
                              {u, w},
                              "independent-side vertices " + std::to_string(u) +
                                  " and " + std::to_string(w) + " are adjacent"});
      }
      for (int x : g.neighbors(w)) {
        if (x != u && side[static_cast<size_t>(x)] == 0 && u < x) {
          violations.push_back(
              {Violation::Kind::kDistance2Conflict,
               {u, w, x},
               "independent-side vertices " + std::to_string(u) + " and " +
                   std::to_string(x) + " share the neighbor " +
                   std::to_string(w)});
        }
      }
    }
  }

  std::vector<char> in_forest(static_cast<size_t>(n), 0);
  for (int v : p.forest) in_forest[static_cast<size_t>(v)] = 1;
  std::vector<int> cycle = find_forest_cycle(g, in_forest);
  if (!cycle.empty()) {
    std::string detail = "forest side contains the cycle";
    for (int v : cycle) detail += " " + std::to_string(v);
    violations.push_back({Violation::Kind::kForestCycle, cycle, detail});
  }
  return violations;
}

}  // namespace ifpart
