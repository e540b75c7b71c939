#include "ifpart/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace ifpart {

MaxFlow::MaxFlow(int node_count)
    : adj_(static_cast<size_t>(node_count)),
      level_(static_cast<size_t>(node_count)),
      iter_(static_cast<size_t>(node_count)) {}

int MaxFlow::add_arc(int from, int to, long long capacity) {
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  adj_[static_cast<size_t>(from)].push_back(
      {to, capacity, static_cast<int>(adj_[static_cast<size_t>(to)].size())});
  adj_[static_cast<size_t>(to)].push_back(
      {from, 0, static_cast<int>(adj_[static_cast<size_t>(from)].size()) - 1});
  return static_cast<int>(adj_[static_cast<size_t>(from)].size()) - 1;
}

bool MaxFlow::bfs(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[static_cast<size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Arc& arc : adj_[static_cast<size_t>(v)]) {
      if (arc.capacity > 0 && level_[static_cast<size_t>(arc.to)] < 0) {
        level_[static_cast<size_t>(arc.to)] = level_[static_cast<size_t>(v)] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[static_cast<size_t>(sink)] >= 0;
}

long long MaxFlow::dfs(int v, int sink, long long limit) {
  if (v == sink) return limit;
  for (size_t& i = iter_[static_cast<size_t>(v)];
       i < adj_[static_cast<size_t>(v)].size(); ++i) {
    Arc& arc = adj_[static_cast<size_t>(v)][i];
    if (arc.capacity <= 0 ||
        level_[static_cast<size_t>(arc.to)] != level_[static_cast<size_t>(v)] + 1) {
      continue;
    }
    long long pushed = dfs(arc.to, sink, std::min(limit, arc.capacity));
    if (pushed > 0) {
      arc.capacity -= pushed;
      adj_[static_cast<size_t>(arc.to)][static_cast<size_t>(arc.reverse)]
          .capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

long long MaxFlow::solve(int source, int sink) {
  long long flow = 0;
  while (bfs(source, sink)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    while (long long pushed =
               dfs(source, sink, std::numeric_limits<long long>::max())) {
      flow += pushed;
    }
  }
  return flow;
}

std::vector<char> MaxFlow::min_cut_source_side(int source) const {
  std::vector<char> reachable(adj_.size(), 0);
  std::queue<int> queue;
  reachable[static_cast<size_t>(source)] = 1;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Arc& arc : adj_[static_cast<size_t>(v)]) {
      if (arc.capacity > 0 && !reachable[static_cast<size_t>(arc.to)]) {
        reachable[static_cast<size_t>(arc.to)] = 1;
        queue.push(arc.to);
      }
    }
  }
  return reachable;
}

}  // namespace ifpart
