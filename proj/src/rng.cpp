#include "ifpart/rng.hpp"

#include <stdexcept>
#include <vector>

namespace ifpart {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t scramble(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return scramble(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: bound must be positive");
  std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t value = next();
    if (value >= threshold) return value % bound;
  }
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  return scramble(master + (index + 1) * kGolden);
}

Graph gnm(int n, long long m, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnm: negative vertex count");
  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges) {
    throw std::invalid_argument("gnm: edge count " + std::to_string(m) +
                                " outside [0, " + std::to_string(max_edges) +
                                "]");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(max_edges));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  SplitMix64 rng(seed);
  Graph g(n);
  // Partial Fisher-Yates: the first m slots become the edge sample.
  for (long long i = 0; i < m; ++i) {
    std::uint64_t j =
        static_cast<std::uint64_t>(i) +
        rng.below(static_cast<std::uint64_t>(max_edges - i));
    std::swap(pairs[static_cast<size_t>(i)], pairs[static_cast<size_t>(j)]);
    g.add_edge(pairs[static_cast<size_t>(i)].first,
               pairs[static_cast<size_t>(i)].second);
  }
  return g;
}

Graph sparse_near_threshold(int n, const Rational& target, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sparse_near_threshold: negative n");
  Rational half_density = target / 2;
  long long base =
      (half_density * n).numerator() / (half_density * n).denominator();
  SplitMix64 rng(seed);
  long long jitter = static_cast<long long>(rng.below(3));
  long long m = rng.next() & 1 ? base + jitter : base - jitter;
  long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0) m = 0;
  if (m > max_edges) m = max_edges;
  return gnm(n, m, rng.next());
}

AssignedGraph random_assignment(Graph g, std::uint64_t seed, int i_sixteenths,
                                int f_sixteenths) {
  if (i_sixteenths < 0 || f_sixteenths < 0 ||
      i_sixteenths + f_sixteenths > 16) {
    throw std::invalid_argument("random_assignment: bad label probabilities");
  }
  SplitMix64 rng(seed);
  AssignedGraph ag = AssignedGraph::all_u(std::move(g));
  for (auto& label : ag.labels) {
    int draw = static_cast<int>(rng.below(16));
    if (draw < i_sixteenths) {
      label = VertexLabel::I;
    } else if (draw < i_sixteenths + f_sixteenths) {
      label = VertexLabel::F;
    }
  }
  return ag;
}

}  // namespace ifpart
