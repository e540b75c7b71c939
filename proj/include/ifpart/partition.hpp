#pragma once

#include <string>
#include <vector>

#include "ifpart/assigned.hpp"

namespace ifpart {

/// Candidate split of V(G) into a 2-independent part and a forest part.
struct Partition {
  std::vector<int> independent;  // the 2-independent side
  std::vector<int> forest;       // the forest side

  /// Builds the partition from an indicator: true = independent side.
  static Partition from_mask(const std::vector<bool>& in_independent);
};

struct Violation {
  enum class Kind {
    kDistance2Conflict,  // two independent-side vertices within distance 2
    kForestCycle,        // cycle inside the forest side
    kExtensionBreach,    // preassigned vertex on the wrong side
  };
  Kind kind;
  /// Witness vertices: the connecting path for a distance conflict, the cycle
  /// for a forest cycle, the single offending vertex for a breach.
  std::vector<int> vertices;
  std::string detail;
};

/// Empty result iff `p` is a valid I,F-partition of ag.graph extending the
/// assignment (I-labeled vertices on the independent side, F-labeled on the
/// forest side). Throws std::invalid_argument unless `p` covers V(G) exactly.
std::vector<Violation> verify_if_partition(const AssignedGraph& ag,
                                           const Partition& p);

}  // namespace ifpart
