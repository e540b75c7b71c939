#pragma once

#include <cstdint>
#include <string>

namespace ifpart {

/// Aggregate result of a property run. `samples` counts generated instances,
/// `checked` the ones that passed the property's filter and were actually
/// tested. The first failing instance is kept verbatim for triage.
struct CheckReport {
  std::string theorem;
  long long samples = 0;
  long long checked = 0;
  long long failures = 0;
  std::string counterexample_graph6;
  std::string counterexample_assignment;
  std::string detail;  // first failure description, or a pass summary

  bool passed() const { return failures == 0; }
};

/// Runs one named property over a deterministic seeded corpus.
/// Names: mad-partition, potential-partition, star4, lemma8, gadget-forcing,
/// claim4, oracle-minpot, oracle-mad. Throws std::invalid_argument on an
/// unknown name. Identical arguments yield identical reports.
CheckReport check_theorem(const std::string& name, int max_n,
                          long long samples, std::uint64_t seed);

}  // namespace ifpart
