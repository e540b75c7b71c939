#include "ifpart/harness.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ifpart/discharge.hpp"
#include "ifpart/gadgets.hpp"
#include "ifpart/partition.hpp"
#include "ifpart/potential.hpp"
#include "ifpart/rng.hpp"
#include "ifpart/solver.hpp"
#include "ifpart/starcolor.hpp"

namespace ifpart {

namespace {

void record_failure(CheckReport& report, const AssignedGraph& ag,
                    const std::string& detail) {
  ++report.failures;
  if (report.failures == 1) {
    report.counterexample_graph6 = to_graph6(ag.graph);
    report.counterexample_assignment = to_assignment_text(ag);
    report.detail = detail;
  }
}

int pick_n(SplitMix64& rng, int max_n, int min_n = 1) {
  if (max_n < min_n) min_n = max_n;
  return min_n + static_cast<int>(
                     rng.below(static_cast<std::uint64_t>(max_n - min_n + 1)));
}

Graph sample_graph(std::uint64_t seed, int max_n) {
  SplitMix64 rng(seed);
  int n = pick_n(rng, max_n, std::min(3, max_n));
  return sparse_near_threshold(n, mad_threshold(), rng.next());
}

AssignedGraph sample_assigned(std::uint64_t seed, int max_n) {
  SplitMix64 rng(seed);
  int n = pick_n(rng, max_n, std::min(3, max_n));
  Graph g = sparse_near_threshold(n, Rational(2), rng.next());
  return random_assignment(std::move(g), rng.next());
}

// Every I,F-partition of the (all-U) expansion must put `host` on `side`.
bool exhaustive_forcing(const AssignedGraph& expanded, int host,
                        bool host_independent, bool& any_partition) {
  int n = expanded.vertex_count();
  any_partition = false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> in_independent(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) in_independent[static_cast<size_t>(v)] = mask >> v & 1;
    Partition p = Partition::from_mask(in_independent);
    if (!verify_if_partition(expanded, p).empty()) continue;
    any_partition = true;
    if (in_independent[static_cast<size_t>(host)] != host_independent) {
      return false;
    }
  }
  return true;
}

CheckReport check_mad_partition(int max_n, long long samples,
                                std::uint64_t seed, bool also_star4) {
  CheckReport report;
  for (long long i = 0; i < samples; ++i) {
    ++report.samples;
    Graph g = sample_graph(mix_seed(seed, static_cast<std::uint64_t>(i)), max_n);
    AssignedGraph ag = AssignedGraph::all_u(g);
    if (g.vertex_count() == 0 || !(mad(g).value < mad_threshold())) continue;
    ++report.checked;
    SolveResult result = solve_if_partition(ag);
    if (result.outcome != SolveResult::Outcome::kSat) {
      record_failure(report, ag, "graph with maximum average degree below 5/2 "
                                 "has no partition");
      continue;
    }
    if (!also_star4) continue;
    ColoringResult coloring = star_coloring_from_partition(g, *result.partition);
    if (coloring.colors_used > 4 ||
        !verify_star_coloring(g, coloring.coloring).empty() ||
        !star_forest_pairs_check(g, coloring.coloring)) {
      record_failure(report, ag, "derived coloring is not a star 4-coloring");
    }
  }
  return report;
}

CheckReport check_potential_partition(int max_n, long long samples,
                                      std::uint64_t seed) {
  CheckReport report;
  for (long long i = 0; i < samples; ++i) {
    ++report.samples;
    AssignedGraph ag =
        sample_assigned(mix_seed(seed, static_cast<std::uint64_t>(i)), max_n);
    if (ag.vertex_count() == 0 || !all_potentials_positive(ag)) continue;
    ++report.checked;
    SolveResult result = solve_if_partition(ag);
    if (result.outcome != SolveResult::Outcome::kSat) {
      record_failure(report, ag, "all-potentials-positive instance has no "
                                 "extending partition");
    }
  }
  return report;
}

CheckReport check_lemma8(int max_n, long long samples, std::uint64_t seed) {
  CheckReport report;
  for (long long i = 0; i < samples; ++i) {
    ++report.samples;
    AssignedGraph ag =
        sample_assigned(mix_seed(seed, static_cast<std::uint64_t>(i)), max_n);
    if (ag.vertex_count() == 0) continue;
    ++report.checked;
    ChargeTrace trace;
    try {
      trace = run_discharging(ag);
    } catch (const std::logic_error& error) {
      record_failure(report, ag, std::string("charge conservation broke: ") +
                                     error.what());
      continue;
    }
    std::vector<int> whole(static_cast<size_t>(ag.vertex_count()));
    for (int v = 0; v < ag.vertex_count(); ++v) whole[static_cast<size_t>(v)] = v;
    long long rho = potential(ag, whole);
    for (int stage = 0; stage < trace.stages; ++stage) {
      if (trace.stage_sum_halves(stage) != -2 * rho) {
        record_failure(report, ag, "stage sum drifted from -rho");
        break;
      }
    }
    if (rho > 0) {
      std::vector<ConfigurationReport> configs = detect_configurations(ag);
      bool degenerate = std::any_of(
          configs.begin(), configs.end(), [](const ConfigurationReport& c) {
            return c.kind == ConfigKind::kDegenerateIsolated ||
                   c.kind == ConfigKind::kDegenerateAllUCycle;
          });
      if (!degenerate && configs.empty()) {
        record_failure(report, ag,
                       "positive-potential instance shows no configuration");
      }
    }
  }
  return report;
}

CheckReport check_gadget_forcing(int max_n, long long samples,
                                 std::uint64_t seed) {
  CheckReport report;
  AssignedGraph single_f{Graph(1), {VertexLabel::F}};
  AssignedGraph single_i{Graph(1), {VertexLabel::I}};
  bool any;
  ++report.samples;
  ++report.checked;
  if (!exhaustive_forcing(attach_f_gadget(single_f, 0).result, 0, false, any) ||
      !any) {
    record_failure(report, single_f,
                   "F-gadget fails to force its host to the forest side");
  }
  ++report.samples;
  ++report.checked;
  if (!exhaustive_forcing(attach_i_gadget(single_i, 0).result, 0, true, any) ||
      !any) {
    record_failure(report, single_i,
                   "I-gadget fails to force its host to the independent side");
  }
  for (long long i = 0; i < samples; ++i) {
    ++report.samples;
    AssignedGraph ag = sample_assigned(
        mix_seed(seed, static_cast<std::uint64_t>(i)), std::min(max_n, 8));
    if (ag.vertex_count() == 0 || !all_potentials_positive(ag)) continue;
    ++report.checked;
    GadgetExpansion expansion = expand_to_unassigned(ag);
    if (!all_potentials_positive(expansion.result)) {
      record_failure(report, ag,
                     "expansion lost the positive-potential property");
    }
  }
  return report;
}

CheckReport check_claim4() {
  CheckReport report;
  report.samples = 1;
  report.checked = 1;
  std::vector<AssignedGraph> configs = enumerate_low_potential_configs();
  auto shape = [](const AssignedGraph& ag) {
    std::string s = std::to_string(ag.vertex_count()) + ":" +
                    std::to_string(ag.graph.edge_count()) + ":";
    std::string labels;
    for (VertexLabel label : ag.labels) labels += label_letter(label);
    std::sort(labels.begin(), labels.end());
    return s + labels;
  };
  std::vector<std::string> got;
  for (const AssignedGraph& ag : configs) got.push_back(shape(ag));
  std::sort(got.begin(), got.end());
  std::vector<std::string> expected = {"1:0:I", "2:0:II", "2:1:FI", "2:1:IU",
                                       "3:1:FII"};
  std::sort(expected.begin(), expected.end());
  if (got != expected) {
    ++report.failures;
    report.detail = "low-potential enumeration mismatch; got";
    for (const std::string& s : got) report.detail += " " + s;
  }
  return report;
}

CheckReport check_oracle_minpot(int max_n, long long samples,
                                std::uint64_t seed) {
  CheckReport report;
  for (long long i = 0; i < samples; ++i) {
    ++report.samples;
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    int n = pick_n(rng, std::min(max_n, 14));
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    long long m = static_cast<long long>(
        rng.below(static_cast<std::uint64_t>(
            std::min(max_edges, 2LL * n) + 1)));
    AssignedGraph ag = random_assignment(gnm(n, m, rng.next()), rng.next());
    ++report.checked;
    PotentialWitness fast = min_potential(ag);
    PotentialWitness slow = brute_force_min_potential(ag);
    if (fast.value != slow.value ||
        potential(ag, fast.vertices) != fast.value) {
      record_failure(report, ag,
                     "minimum potential disagrees with the exhaustive oracle");
    }
  }
  return report;
}

CheckReport check_oracle_mad(int max_n, long long samples, std::uint64_t seed) {
  CheckReport report;
  for (long long i = 0; i < samples; ++i) {
    ++report.samples;
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    int n = pick_n(rng, std::min(max_n, 16));
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    long long m = static_cast<long long>(
        rng.below(static_cast<std::uint64_t>(
            std::min(max_edges, 2LL * n) + 1)));
    Graph g = gnm(n, m, rng.next());
    ++report.checked;
    DensityWitness fast = mad(g);
    DensityWitness slow = brute_force_mad(g);
    bool witness_ok =
        fast.vertices.empty()
            ? g.vertex_count() == 0
            : Rational(2 * g.edges_within(fast.vertices),
                       static_cast<long long>(fast.vertices.size())) ==
                  fast.value;
    if (fast.value != slow.value || !witness_ok) {
      record_failure(report, AssignedGraph::all_u(g),
                     "maximum average degree disagrees with the oracle");
    }
  }
  return report;
}

}  // namespace

CheckReport check_theorem(const std::string& name, int max_n,
                          long long samples, std::uint64_t seed) {
  if (max_n < 1) throw std::invalid_argument("check_theorem: max_n must be >= 1");
  CheckReport report;
  if (name == "mad-partition") {
    report = check_mad_partition(max_n, samples, seed, false);
  } else if (name == "star4") {
    report = check_mad_partition(max_n, samples, seed, true);
  } else if (name == "potential-partition") {
    report = check_potential_partition(max_n, samples, seed);
  } else if (name == "lemma8") {
    report = check_lemma8(max_n, samples, seed);
  } else if (name == "gadget-forcing") {
    report = check_gadget_forcing(max_n, samples, seed);
  } else if (name == "claim4") {
    report = check_claim4();
  } else if (name == "oracle-minpot") {
    report = check_oracle_minpot(max_n, samples, seed);
  } else if (name == "oracle-mad") {
    report = check_oracle_mad(max_n, samples, seed);
  } else {
    throw std::invalid_argument("check_theorem: unknown property " + name);
  }
  report.theorem = name;
  if (report.failures == 0 && report.detail.empty()) {
    report.detail = "checked " + std::to_string(report.checked) + " of " +
                    std::to_string(report.samples) + " samples, no failures";
  }
  return report;
}

}  // namespace ifpart
