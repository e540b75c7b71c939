#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ifpart/assigned.hpp"

namespace ifpart {

/// Maximal path of degree-2 U vertices. `internal` is ordered along the
/// path; a closed thread has a single bordering vertex (both entries of
/// `borders` equal) and counts twice in per-vertex incidence.
struct Thread {
  std::vector<int> internal;
  std::array<int, 2> borders;  // border adjacent to internal.front() / .back()
  bool closed = false;

  int length() const { return static_cast<int>(internal.size()); }
};

/// All maximal threads. Components that are cycles of degree-2 U vertices
/// carry no threads; detect_configurations reports them as degenerate.
std::vector<Thread> find_threads(const AssignedGraph& ag);

enum class ConfigKind {
  kC1,                   // 1-vertex in U
  kC2,                   // 3+-thread
  kC3,                   // 4-vertex in U with four incident 2-threads
  kCl6DeleteLeaf,        // 1-vertex in F
  kCl6Contract,          // 2-vertex in F
  kCl7,                  // 3-vertex in F or U, no I neighbor, on a 2-thread
  kCl8,                  // 3-vertex in U, three 1-threads, far borders in F or U
  kCl9,                  // 4-vertex in U, three 2-threads + 1-thread, far border in F or U
  kDegenerateIsolated,   // degree-0 vertex
  kDegenerateAllUCycle,  // 2-regular all-U cycle component
};

std::string config_kind_name(ConfigKind kind);

struct ConfigurationReport {
  ConfigKind kind;
  int anchor;                  // defining vertex (a thread-middle vertex for C2)
  std::vector<int> vertices;   // all involved vertices, sorted
  std::vector<Thread> threads; // the incident threads the pattern uses
};

std::vector<ConfigurationReport> detect_configurations(const AssignedGraph& ag);

/// Per-vertex charges after each stage, in half-units (the rules move
/// half-integer amounts). mu_halves[v][i] is 2 * mu_i(v).
struct ChargeTransfer {
  int rule;  // 1, 2, or 3
  int from;
  int to;
  long long amount_halves;
};

struct ChargeTrace {
  std::vector<std::array<long long, 4>> mu_halves;
  std::vector<ChargeTransfer> transfers;
  int stages = 0;  // 1 after initial charge, 4 after the full rule run

  long long stage_sum_halves(int stage) const;
};

/// mu_0(v) = 2 d(v) - (1 | 4 | 5) for I | F | U; asserts sum = -rho(G).
ChargeTrace initial_charge(const AssignedGraph& ag);

/// Applies R1 (overfull vertices send 1 to each neighbor), then R2 (needy
/// 1-thread internals pull 1/2 from each neighbor), then R3 (needy 2-thread
/// internals pull 1 from their border-side neighbor; both internals of a
/// closed 2-thread pull from the single border). Each rule reads the frozen
/// charges of the previous stage. Conservation is asserted after every stage.
ChargeTrace run_discharging(const AssignedGraph& ag);

struct AuditResult {
  bool vacuous;  // configurations present, nothing to audit
  std::vector<ConfigurationReport> configs;
  long long rho;
  bool rho_nonpositive;
  bool charges_nonnegative;
  std::optional<ChargeTrace> trace;  // present when the audit ran

  bool passed() const {
    return vacuous || (rho_nonpositive && charges_nonnegative);
  }
};

/// On a configuration-free graph, checks rho(G) <= 0 and mu_3 >= 0
/// everywhere; otherwise reports the configurations found and skips.
AuditResult audit_lemma8(const AssignedGraph& ag);

/// All assigned graphs H, up to label-respecting isomorphism, with
/// |V(H)| + |E(H)| <= 4, 0 < rho(H) < 3, and every nonempty subset of
/// positive potential. Exactly five graphs.
std::vector<AssignedGraph> enumerate_low_potential_configs();

}  // namespace ifpart
