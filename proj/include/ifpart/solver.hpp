#pragma once

#include <optional>
#include <vector>

#include "ifpart/assigned.hpp"
#include "ifpart/discharge.hpp"
#include "ifpart/partition.hpp"

namespace ifpart {

struct SolveStats {
  long long nodes = 0;       // backtracking nodes expanded
  long long reductions = 0;  // reduction steps applied
  bool capped = false;
};

struct SolveResult {
  enum class Outcome { kSat, kUnsat, kInconclusive };
  Outcome outcome;
  std::optional<Partition> partition;  // present iff kSat, verified
  SolveStats stats;
};

struct SolveOptions {
  long long node_cap = 20'000'000;
  bool use_reductions = true;
};

/// Complete decision/search for an I,F-partition extending the assignment.
/// Reduction-first: configurations with a proof-backed extender shrink the
/// instance; reductions that change labels are attempted and abandoned on
/// failure, so completeness rests on the plain backtracking fallback.
SolveResult solve_if_partition(const AssignedGraph& ag,
                               const SolveOptions& options = {});

/// One reduction step: a smaller (or relabeled) instance plus the extender
/// taking any valid partition of the reduced instance back to the original.
class ReductionStep {
 public:
  ConfigKind kind() const { return kind_; }
  const AssignedGraph& reduced() const { return reduced_; }
  /// reduced vertex index -> original vertex index
  const std::vector<int>& vertex_map() const { return reduced_to_original_; }
  /// True when a partition of the original always restricts to one of the
  /// reduced instance, so an UNSAT answer transfers back.
  bool unsat_propagates() const { return unsat_propagates_; }

  /// Maps a valid partition of reduced() to a verified partition of the
  /// original instance. Throws std::invalid_argument if the input fails
  /// verification and std::logic_error if the extension itself fails.
  Partition extend(const Partition& reduced_partition) const;

 private:
  friend std::optional<ReductionStep> reduce_configuration(
      const AssignedGraph& ag, const ConfigurationReport& config);

  ConfigKind kind_;
  AssignedGraph original_;
  AssignedGraph reduced_;
  std::vector<int> reduced_to_original_;
  bool unsat_propagates_ = false;
  // Extension payload: vertices deleted from the original, and the anchor
  // data the per-kind extension cases read.
  std::vector<int> deleted_;
  int anchor_ = -1;
  std::vector<int> case_vertices_;  // kind-specific survivors (borders etc.)
};

/// Builds the reduction for a detected configuration, or nullopt when the
/// configuration admits none here (degenerate kinds always reduce; a
/// CL6_CONTRACT whose 2-vertex has adjacent neighbors throws, per its
/// precondition). Throws std::invalid_argument if the configuration does not
/// re-check on ag.
std::optional<ReductionStep> reduce_configuration(
    const AssignedGraph& ag, const ConfigurationReport& config);

}  // namespace ifpart
