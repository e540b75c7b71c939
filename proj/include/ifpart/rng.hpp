#pragma once

#include <cstdint>

#include "ifpart/assigned.hpp"
#include "ifpart/potential.hpp"

namespace ifpart {

/// splitmix64: state advances by the 64-bit golden ratio constant
/// 0x9E3779B97F4A7C15; each output is the scrambled state
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
/// Fixed here (not std::mt19937 etc.) so generated corpora are identical
/// across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, bound), bound >= 1, via rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Per-sample seed for (master seed, sample index): one splitmix64 output
/// taken at state master + (index + 1) * 0x9E3779B97F4A7C15. Serial and
/// parallel harness runs thus generate identical corpora.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

/// Uniform simple graph with n vertices and exactly m edges.
/// Throws std::invalid_argument if m > n(n-1)/2.
Graph gnm(int n, long long m, std::uint64_t seed);

/// n vertices, m = floor((target/2) * n) +- uniform{0,1,2} edges (clamped to
/// the feasible range), for sampling near a density threshold.
Graph sparse_near_threshold(int n, const Rational& target, std::uint64_t seed);

/// Random labeling of g: each vertex I with probability i_sixteenths/16,
/// else F with probability f_sixteenths/16, else U.
AssignedGraph random_assignment(Graph g, std::uint64_t seed,
                                int i_sixteenths = 2, int f_sixteenths = 4);

}  // namespace ifpart
