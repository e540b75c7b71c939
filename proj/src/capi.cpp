#include "ifpart.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <numeric>
#include <string>

#include <json.hpp>

#include "ifpart/discharge.hpp"
#include "ifpart/gadgets.hpp"
#include "ifpart/harness.hpp"
#include "ifpart/partition.hpp"
#include "ifpart/potential.hpp"
#include "ifpart/rng.hpp"
#include "ifpart/solver.hpp"
#include "ifpart/starcolor.hpp"

using nlohmann::ordered_json;

struct ifpart_graph {
  ifpart::Graph graph;
};

struct ifpart_assigned {
  ifpart::AssignedGraph assigned;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Body>
int guard(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const ifpart::ParseError& error) {
    return fail(IFPART_ERR_PARSE, error.what());
  } catch (const std::invalid_argument& error) {
    return fail(IFPART_ERR_ARG, error.what());
  } catch (const std::exception& error) {
    return fail(IFPART_ERR_INTERNAL, error.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int* dup_ints(const std::vector<int>& values) {
  int* out = static_cast<int*>(
      std::malloc(std::max<size_t>(1, values.size()) * sizeof(int)));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, values.data(), values.size() * sizeof(int));
  return out;
}

void require_handle(const void* handle, const char* what) {
  if (!handle) throw std::invalid_argument(std::string(what) + " handle is null");
}

int solve_outcome(ifpart::SolveResult::Outcome outcome) {
  switch (outcome) {
    case ifpart::SolveResult::Outcome::kSat: return IFPART_SAT;
    case ifpart::SolveResult::Outcome::kUnsat: return IFPART_UNSAT;
    case ifpart::SolveResult::Outcome::kInconclusive: return IFPART_INCONCLUSIVE;
  }
  throw std::logic_error("unreachable solve outcome");
}

ifpart::SolveOptions options_with_cap(long long node_cap) {
  ifpart::SolveOptions options;
  if (node_cap > 0) options.node_cap = node_cap;
  return options;
}

}  // namespace

extern "C" {

const char* ifpart_last_error(void) { return g_last_error.c_str(); }

void ifpart_string_free(char* s) { std::free(s); }
void ifpart_ints_free(int* a) { std::free(a); }

int ifpart_graph_parse(const char* text, int format, ifpart_graph** out) {
  return guard([&] {
    require_handle(text, "text");
    require_handle(out, "out");
    if (format != IFPART_FORMAT_GRAPH6 && format != IFPART_FORMAT_EDGE_LIST) {
      throw std::invalid_argument("unknown graph format code");
    }
    ifpart::GraphParseResult parsed = ifpart::parse_graph(
        text, format == IFPART_FORMAT_GRAPH6 ? ifpart::GraphFormat::kGraph6
                                             : ifpart::GraphFormat::kEdgeList);
    *out = new ifpart_graph{std::move(parsed.graph)};
    return IFPART_OK;
  });
}

int ifpart_graph_from_edges(int vertex_count, const int* endpoint_pairs,
                            long long edge_count, ifpart_graph** out) {
  return guard([&] {
    require_handle(out, "out");
    if (edge_count > 0) require_handle(endpoint_pairs, "endpoint_pairs");
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    ifpart::Graph g(vertex_count);
    for (long long i = 0; i < edge_count; ++i) {
      g.add_edge(endpoint_pairs[2 * i], endpoint_pairs[2 * i + 1]);
    }
    *out = new ifpart_graph{std::move(g)};
    return IFPART_OK;
  });
}

void ifpart_graph_free(ifpart_graph* g) { delete g; }

int ifpart_graph_counts(const ifpart_graph* g, int* vertex_count,
                        long long* edge_count) {
  return guard([&] {
    require_handle(g, "graph");
    if (vertex_count) *vertex_count = g->graph.vertex_count();
    if (edge_count) *edge_count = g->graph.edge_count();
    return IFPART_OK;
  });
}

int ifpart_graph_to_graph6(const ifpart_graph* g, char** out) {
  return guard([&] {
    require_handle(g, "graph");
    require_handle(out, "out");
    *out = dup_string(ifpart::to_graph6(g->graph));
    return IFPART_OK;
  });
}

int ifpart_graph_to_edge_list(const ifpart_graph* g, char** out) {
  return guard([&] {
    require_handle(g, "graph");
    require_handle(out, "out");
    *out = dup_string(ifpart::to_edge_list(g->graph));
    return IFPART_OK;
  });
}

int ifpart_assigned_parse(const ifpart_graph* g, const char* assign_text,
                          ifpart_assigned** out) {
  return guard([&] {
    require_handle(g, "graph");
    require_handle(assign_text, "assign_text");
    require_handle(out, "out");
    ifpart::AssignmentParseResult parsed =
        ifpart::parse_assignment(assign_text, g->graph);
    *out = new ifpart_assigned{std::move(parsed.assigned)};
    return IFPART_OK;
  });
}

int ifpart_assigned_all_u(const ifpart_graph* g, ifpart_assigned** out) {
  return guard([&] {
    require_handle(g, "graph");
    require_handle(out, "out");
    *out = new ifpart_assigned{ifpart::AssignedGraph::all_u(g->graph)};
    return IFPART_OK;
  });
}

int ifpart_assigned_to_text(const ifpart_assigned* ag, char** out) {
  return guard([&] {
    require_handle(ag, "assignment");
    require_handle(out, "out");
    *out = dup_string(ifpart::to_assignment_text(ag->assigned));
    return IFPART_OK;
  });
}

void ifpart_assigned_free(ifpart_assigned* ag) { delete ag; }

int ifpart_mad(const ifpart_graph* g, long long* num, long long* den,
               int** witness, long long* witness_len) {
  return guard([&] {
    require_handle(g, "graph");
    ifpart::DensityWitness result = ifpart::mad(g->graph);
    if (num) *num = result.value.numerator();
    if (den) *den = result.value.denominator();
    if (witness) *witness = dup_ints(result.vertices);
    if (witness_len) *witness_len = static_cast<long long>(result.vertices.size());
    return IFPART_OK;
  });
}

int ifpart_min_potential(const ifpart_assigned* ag, long long* value,
                         int** witness, long long* witness_len) {
  return guard([&] {
    require_handle(ag, "assignment");
    ifpart::PotentialWitness result = ifpart::min_potential(ag->assigned);
    if (value) *value = result.value;
    if (witness) *witness = dup_ints(result.vertices);
    if (witness_len) *witness_len = static_cast<long long>(result.vertices.size());
    return IFPART_OK;
  });
}

int ifpart_potential(const ifpart_assigned* ag, const int* subset,
                     long long subset_len, long long* value) {
  return guard([&] {
    require_handle(ag, "assignment");
    if (subset_len > 0) require_handle(subset, "subset");
    std::vector<int> vertices(subset, subset + subset_len);
    long long rho = ifpart::potential(ag->assigned, vertices);
    if (value) *value = rho;
    return IFPART_OK;
  });
}

int ifpart_girth_mad_bound(int girth, long long* num, long long* den) {
  return guard([&] {
    ifpart::Rational bound = ifpart::girth_mad_bound(girth);
    if (num) *num = bound.numerator();
    if (den) *den = bound.denominator();
    return IFPART_OK;
  });
}

int ifpart_solve_partition(const ifpart_assigned* ag, long long node_cap,
                           int* outcome, int** independent,
                           long long* independent_len, int** forest,
                           long long* forest_len) {
  return guard([&] {
    require_handle(ag, "assignment");
    require_handle(outcome, "outcome");
    ifpart::SolveResult result =
        ifpart::solve_if_partition(ag->assigned, options_with_cap(node_cap));
    *outcome = solve_outcome(result.outcome);
    if (result.outcome == ifpart::SolveResult::Outcome::kSat) {
      if (independent) *independent = dup_ints(result.partition->independent);
      if (independent_len) {
        *independent_len =
            static_cast<long long>(result.partition->independent.size());
      }
      if (forest) *forest = dup_ints(result.partition->forest);
      if (forest_len) {
        *forest_len = static_cast<long long>(result.partition->forest.size());
      }
    } else {
      if (independent) *independent = nullptr;
      if (independent_len) *independent_len = 0;
      if (forest) *forest = nullptr;
      if (forest_len) *forest_len = 0;
    }
    return IFPART_OK;
  });
}

int ifpart_star_chromatic(const ifpart_graph* g, int vertex_cap, int* k,
                          int** colors, long long* colors_len) {
  return guard([&] {
    require_handle(g, "graph");
    ifpart::ColoringResult result =
        vertex_cap > 0 ? ifpart::star_chromatic_number(g->graph, vertex_cap)
                       : ifpart::star_chromatic_number(g->graph);
    if (k) *k = result.colors_used;
    if (colors) *colors = dup_ints(result.coloring.colors);
    if (colors_len) {
      *colors_len = static_cast<long long>(result.coloring.colors.size());
    }
    return IFPART_OK;
  });
}

int ifpart_star_four_coloring(const ifpart_graph* g, long long node_cap,
                              int* outcome, int* k, int** colors,
                              long long* colors_len) {
  return guard([&] {
    require_handle(g, "graph");
    require_handle(outcome, "outcome");
    ifpart::AssignedGraph all_u = ifpart::AssignedGraph::all_u(g->graph);
    ifpart::SolveResult result =
        ifpart::solve_if_partition(all_u, options_with_cap(node_cap));
    *outcome = solve_outcome(result.outcome);
    if (result.outcome != ifpart::SolveResult::Outcome::kSat) {
      if (k) *k = 0;
      if (colors) *colors = nullptr;
      if (colors_len) *colors_len = 0;
      return IFPART_OK;
    }
    ifpart::ColoringResult coloring =
        ifpart::star_coloring_from_partition(g->graph, *result.partition);
    if (k) *k = coloring.colors_used;
    if (colors) *colors = dup_ints(coloring.coloring.colors);
    if (colors_len) {
      *colors_len = static_cast<long long>(coloring.coloring.colors.size());
    }
    return IFPART_OK;
  });
}

int ifpart_sharpness_graph(int k, ifpart_graph** out) {
  return guard([&] {
    require_handle(out, "out");
    *out = new ifpart_graph{ifpart::sharpness_graph(k).result};
    return IFPART_OK;
  });
}

int ifpart_expand_gadgets(const ifpart_assigned* ag, ifpart_graph** out) {
  return guard([&] {
    require_handle(ag, "assignment");
    require_handle(out, "out");
    *out = new ifpart_graph{ifpart::expand_to_unassigned(ag->assigned).result.graph};
    return IFPART_OK;
  });
}

int ifpart_generate_gnm(int n, long long m, uint64_t seed, ifpart_graph** out) {
  return guard([&] {
    require_handle(out, "out");
    *out = new ifpart_graph{ifpart::gnm(n, m, seed)};
    return IFPART_OK;
  });
}

int ifpart_generate_sparse(int n, long long target_num, long long target_den,
                           uint64_t seed, ifpart_graph** out) {
  return guard([&] {
    require_handle(out, "out");
    if (target_den <= 0) throw std::invalid_argument("target denominator must be positive");
    *out = new ifpart_graph{ifpart::sparse_near_threshold(
        n, ifpart::Rational(target_num, target_den), seed)};
    return IFPART_OK;
  });
}

int ifpart_discharge_json(const ifpart_assigned* ag, char** json) {
  return guard([&] {
    require_handle(ag, "assignment");
    require_handle(json, "json");
    const ifpart::AssignedGraph& assigned = ag->assigned;
    ifpart::AuditResult audit = ifpart::audit_lemma8(assigned);

    ordered_json doc;
    ordered_json threads = ordered_json::array();
    for (const ifpart::Thread& t : ifpart::find_threads(assigned)) {
      threads.push_back({{"internal", t.internal},
                         {"borders", {t.borders[0], t.borders[1]}},
                         {"closed", t.closed}});
    }
    doc["threads"] = std::move(threads);

    ordered_json configs = ordered_json::array();
    for (const ifpart::ConfigurationReport& c : audit.configs) {
      configs.push_back({{"kind", ifpart::config_kind_name(c.kind)},
                         {"anchor", c.anchor},
                         {"vertices", c.vertices}});
    }
    doc["configs"] = std::move(configs);
    doc["rho"] = audit.rho;
    doc["vacuous"] = audit.vacuous;
    doc["rho_nonpositive"] = audit.rho_nonpositive;
    doc["charges_nonnegative"] = audit.charges_nonnegative;
    doc["passed"] = audit.passed();

    ifpart::ChargeTrace trace =
        audit.trace ? *audit.trace : ifpart::run_discharging(assigned);
    ordered_json mu = ordered_json::array();
    for (const auto& stages : trace.mu_halves) {
      mu.push_back({stages[0], stages[1], stages[2], stages[3]});
    }
    doc["mu_halves"] = std::move(mu);
    ordered_json transfers = ordered_json::array();
    for (const ifpart::ChargeTransfer& t : trace.transfers) {
      bool whole = t.amount_halves % 2 == 0;
      transfers.push_back({{"rule", t.rule},
                           {"from", t.from},
                           {"to", t.to},
                           {"amount_num", whole ? t.amount_halves / 2
                                                : t.amount_halves},
                           {"amount_den", whole ? 1 : 2}});
    }
    doc["transfers"] = std::move(transfers);
    *json = dup_string(doc.dump());
    return IFPART_OK;
  });
}

int ifpart_check_theorem(const char* name, int max_n, long long samples,
                         uint64_t seed, int* passed, char** report_json) {
  return guard([&] {
    require_handle(name, "name");
    ifpart::CheckReport report =
        ifpart::check_theorem(name, max_n, samples, seed);
    if (passed) *passed = report.passed() ? 1 : 0;
    if (report_json) {
      ordered_json doc;
      doc["theorem"] = report.theorem;
      doc["samples"] = report.samples;
      doc["checked"] = report.checked;
      doc["failures"] = report.failures;
      doc["passed"] = report.passed();
      doc["detail"] = report.detail;
      if (report.failures > 0) {
        doc["counterexample"] = {
            {"graph6", report.counterexample_graph6},
            {"assignment", report.counterexample_assignment}};
      } else {
        doc["counterexample"] = nullptr;
      }
      *report_json = dup_string(doc.dump());
    }
    return IFPART_OK;
  });
}

}  // extern "C"
