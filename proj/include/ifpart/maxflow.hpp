#pragma once

#include <vector>

namespace ifpart {

/// Dinic max-flow over integer capacities. Deterministic: augmenting order
/// follows arc insertion order.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  /// Adds a directed arc and returns its index.
  int add_arc(int from, int to, long long capacity);

  long long solve(int source, int sink);

  /// After solve(): nodes reachable from the source in the residual graph
  /// (the canonical source side of a minimum cut).
  std::vector<char> min_cut_source_side(int source) const;

 private:
  struct Arc {
    int to;
    long long capacity;
    int reverse;  // index of the paired arc in adj_[to]
  };

  bool bfs(int source, int sink);
  long long dfs(int v, int sink, long long limit);

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<size_t> iter_;
};

}  // namespace ifpart
