#include "ifpart/discharge.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "ifpart/potential.hpp"

namespace ifpart {

namespace {

struct ThreadAnalysis {
  std::vector<Thread> threads;
  std::vector<std::vector<int>> all_u_cycles;  // 2-regular all-U components
};

bool is_thread_internal_candidate(const AssignedGraph& ag, int v) {
  return ag.label(v) == VertexLabel::U && ag.graph.degree(v) == 2;
}

ThreadAnalysis analyze_threads(const AssignedGraph& ag) {
  ag.validate();
  const Graph& g = ag.graph;
  int n = g.vertex_count();
  ThreadAnalysis analysis;
  std::vector<char> visited(static_cast<size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (visited[static_cast<size_t>(s)] || !is_thread_internal_candidate(ag, s)) {
      continue;
    }
    // Walk from s in one direction; detect a pure cycle of candidates.
    auto walk = [&](int first) {
      std::vector<int> chain;
      int prev = s, cur = first;
      while (cur != s && is_thread_internal_candidate(ag, cur)) {
        chain.push_back(cur);
        const auto& nbrs = g.neighbors(cur);
        int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
      }
      return std::pair<std::vector<int>, int>{std::move(chain), cur};
    };
    auto [right_chain, right_end] = walk(g.neighbors(s)[0]);
    if (right_end == s) {
      // Closed ring of degree-2 U vertices: a degenerate component.
      std::vector<int> cycle{s};
      cycle.insert(cycle.end(), right_chain.begin(), right_chain.end());
      for (int v : cycle) visited[static_cast<size_t>(v)] = 1;
      analysis.all_u_cycles.push_back(std::move(cycle));
      continue;
    }
    auto [left_chain, left_end] = walk(g.neighbors(s)[1]);
    Thread thread;
    thread.internal.assign(left_chain.rbegin(), left_chain.rend());
    thread.internal.push_back(s);
    thread.internal.insert(thread.internal.end(), right_chain.begin(),
                           right_chain.end());
    thread.borders = {left_end, right_end};
    thread.closed = left_end == right_end;
    for (int v : thread.internal) visited[static_cast<size_t>(v)] = 1;
    analysis.threads.push_back(std::move(thread));
  }
  return analysis;
}

bool in_i_complement(const AssignedGraph& ag, int v) {
  return ag.label(v) != VertexLabel::I;
}

}  // namespace

std::vector<Thread> find_threads(const AssignedGraph& ag) {
  return analyze_threads(ag).threads;
}

std::string config_kind_name(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::kC1: return "C1";
    case ConfigKind::kC2: return "C2";
    case ConfigKind::kC3: return "C3";
    case ConfigKind::kCl6DeleteLeaf: return "CL6_DELETE";
    case ConfigKind::kCl6Contract: return "CL6_CONTRACT";
    case ConfigKind::kCl7: return "CL7";
    case ConfigKind::kCl8: return "CL8";
    case ConfigKind::kCl9: return "CL9";
    case ConfigKind::kDegenerateIsolated: return "DEGENERATE_ISOLATED";
    case ConfigKind::kDegenerateAllUCycle: return "DEGENERATE_ALL_U_CYCLE";
  }
  throw std::logic_error("unreachable config kind");
}

std::vector<ConfigurationReport> detect_configurations(const AssignedGraph& ag) {
  ag.validate();
  const Graph& g = ag.graph;
  int n = g.vertex_count();
  ThreadAnalysis analysis = analyze_threads(ag);
  std::vector<ConfigurationReport> reports;

  auto add_report = [&](ConfigKind kind, int anchor, std::vector<int> vertices,
                        std::vector<Thread> threads = {}) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    reports.push_back({kind, anchor, std::move(vertices), std::move(threads)});
  };

  // Threads bordering each vertex; closed threads touch their single
  // border twice, so they contribute two incidences.
  struct Incidence {
    const Thread* thread;
    bool far_side;  // true if the border is thread->borders[1]
  };
  std::vector<std::vector<Incidence>> incident(static_cast<size_t>(n));
  for (const Thread& t : analysis.threads) {
    incident[static_cast<size_t>(t.borders[0])].push_back({&t, false});
    incident[static_cast<size_t>(t.borders[1])].push_back({&t, true});
  }

  for (int v = 0; v < n; ++v) {
    int deg = g.degree(v);
    VertexLabel label = ag.label(v);
    if (deg == 0) {
      add_report(ConfigKind::kDegenerateIsolated, v, {v});
      continue;
    }
    if (deg == 1 && label == VertexLabel::U) add_report(ConfigKind::kC1, v, {v});
    if (deg == 1 && label == VertexLabel::F) {
      add_report(ConfigKind::kCl6DeleteLeaf, v, {v});
    }
    if (deg == 2 && label == VertexLabel::F) {
      add_report(ConfigKind::kCl6Contract, v, {v});
    }

    int two_thread_incidence = 0;
    int one_thread_incidence = 0;
    for (const Incidence& inc : incident[static_cast<size_t>(v)]) {
      if (inc.thread->length() == 2) ++two_thread_incidence;
      if (inc.thread->length() == 1) ++one_thread_incidence;
    }

    if (deg == 4 && label == VertexLabel::U && two_thread_incidence == 4) {
      std::vector<int> vertices{v};
      std::vector<Thread> used;
      for (const Incidence& inc : incident[static_cast<size_t>(v)]) {
        if (inc.thread->length() != 2) continue;
        vertices.insert(vertices.end(), inc.thread->internal.begin(),
                        inc.thread->internal.end());
        if (!inc.thread->closed || !inc.far_side) used.push_back(*inc.thread);
      }
      add_report(ConfigKind::kC3, v, std::move(vertices), std::move(used));
    }

    if (deg == 3 && label != VertexLabel::I && two_thread_incidence >= 1) {
      bool has_i_neighbor = false;
      for (int w : g.neighbors(v)) {
        if (ag.label(w) == VertexLabel::I) has_i_neighbor = true;
      }
      if (!has_i_neighbor) {
        for (const Incidence& inc : incident[static_cast<size_t>(v)]) {
          if (inc.thread->length() != 2) continue;
          if (inc.thread->closed && inc.far_side) continue;  // once per thread
          std::vector<int> vertices{v};
          vertices.insert(vertices.end(), inc.thread->internal.begin(),
                          inc.thread->internal.end());
          add_report(ConfigKind::kCl7, v, std::move(vertices), {*inc.thread});
        }
      }
    }

    if (deg == 3 && label == VertexLabel::U && one_thread_incidence == 3) {
      bool far_borders_ok = true;
      std::vector<int> vertices{v};
      std::vector<Thread> used;
      for (const Incidence& inc : incident[static_cast<size_t>(v)]) {
        if (inc.thread->length() != 1) continue;
        int far = inc.thread->borders[inc.far_side ? 0 : 1];
        if (!in_i_complement(ag, far)) far_borders_ok = false;
        vertices.push_back(inc.thread->internal[0]);
        used.push_back(*inc.thread);
      }
      if (far_borders_ok) {
        add_report(ConfigKind::kCl8, v, std::move(vertices), std::move(used));
      }
    }

    if (deg == 4 && label == VertexLabel::U && two_thread_incidence == 3 &&
        one_thread_incidence == 1) {
      bool far_border_ok = false;
      std::vector<int> vertices{v};
      std::vector<Thread> used;
      for (const Incidence& inc : incident[static_cast<size_t>(v)]) {
        if (inc.thread->length() == 1) {
          int far = inc.thread->borders[inc.far_side ? 0 : 1];
          far_border_ok = in_i_complement(ag, far);
        }
        if (inc.thread->length() > 2) continue;
        if (inc.thread->closed && inc.far_side) continue;
        vertices.insert(vertices.end(), inc.thread->internal.begin(),
                        inc.thread->internal.end());
        used.push_back(*inc.thread);
      }
      if (far_border_ok) {
        add_report(ConfigKind::kCl9, v, std::move(vertices), std::move(used));
      }
    }
  }

  for (const Thread& t : analysis.threads) {
    if (t.length() >= 3) {
      add_report(ConfigKind::kC2, t.internal[t.length() / 2], t.internal, {t});
    }
  }
  for (const std::vector<int>& cycle : analysis.all_u_cycles) {
    add_report(ConfigKind::kDegenerateAllUCycle, cycle.front(), cycle);
  }
  return reports;
}

long long ChargeTrace::stage_sum_halves(int stage) const {
  long long sum = 0;
  for (const auto& mu : mu_halves) sum += mu[static_cast<size_t>(stage)];
  return sum;
}

namespace {

void assert_conservation(const ChargeTrace& trace, int stage, long long rho) {
  if (trace.stage_sum_halves(stage) != -2 * rho) {
    throw std::logic_error("discharging: charge not conserved at stage " +
                           std::to_string(stage));
  }
}

}  // namespace

ChargeTrace initial_charge(const AssignedGraph& ag) {
  ag.validate();
  int n = ag.vertex_count();
  ChargeTrace trace;
  trace.mu_halves.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    long long mu0 = 2LL * ag.graph.degree(v) - potential_weight(ag.label(v));
    trace.mu_halves[static_cast<size_t>(v)] = {2 * mu0, 2 * mu0, 2 * mu0, 2 * mu0};
  }
  trace.stages = 1;
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  assert_conservation(trace, 0, n == 0 ? 0 : potential(ag, all));
  return trace;
}

ChargeTrace run_discharging(const AssignedGraph& ag) {
  ChargeTrace trace = initial_charge(ag);
  const Graph& g = ag.graph;
  int n = g.vertex_count();
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  long long rho = n == 0 ? 0 : potential(ag, all);
  auto mu = [&](int v) -> std::array<long long, 4>& {
    return trace.mu_halves[static_cast<size_t>(v)];
  };

  // R1: overfull vertices send charge 1 to every neighbor.
  for (int v = 0; v < n; ++v) {
    if (mu(v)[0] >= 2LL * g.degree(v)) {
      for (int u : g.neighbors(v)) {
        mu(v)[1] -= 2;
        mu(u)[1] += 2;
        trace.transfers.push_back({1, v, u, 2});
      }
    }
  }
  for (int v = 0; v < n; ++v) mu(v)[2] = mu(v)[3] = mu(v)[1];
  assert_conservation(trace, 1, rho);

  std::vector<Thread> threads = find_threads(ag);

  // R2: a 1-thread internal vertex still in deficit pulls 1/2 from each
  // neighbor (its two borders).
  for (const Thread& t : threads) {
    if (t.length() != 1) continue;
    int x = t.internal[0];
    if (mu(x)[1] < 0) {
      for (int b : {t.borders[0], t.borders[1]}) {
        mu(b)[2] -= 1;
        mu(x)[2] += 1;
        trace.transfers.push_back({2, b, x, 1});
      }
    }
  }
  for (int v = 0; v < n; ++v) mu(v)[3] = mu(v)[2];
  assert_conservation(trace, 2, rho);

  // R3: a 2-thread internal vertex still in deficit pulls 1 from its
  // border-side neighbor; for a closed 2-thread both internals pull from
  // the single border.
  for (const Thread& t : threads) {
    if (t.length() != 2) continue;
    for (int side = 0; side < 2; ++side) {
      int x = t.internal[static_cast<size_t>(side)];
      int b = t.borders[static_cast<size_t>(side)];
      if (mu(x)[2] < 0) {
        mu(b)[3] -= 2;
        mu(x)[3] += 2;
        trace.transfers.push_back({3, b, x, 2});
      }
    }
  }
  assert_conservation(trace, 3, rho);
  trace.stages = 4;
  return trace;
}

AuditResult audit_lemma8(const AssignedGraph& ag) {
  AuditResult result;
  result.configs = detect_configurations(ag);
  result.vacuous = !result.configs.empty();
  int n = ag.vertex_count();
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  result.rho = n == 0 ? 0 : potential(ag, all);
  result.rho_nonpositive = result.rho <= 0;
  result.charges_nonnegative = true;
  if (result.vacuous) return result;
  ChargeTrace trace = run_discharging(ag);
  for (const auto& mu : trace.mu_halves) {
    if (mu[3] < 0) result.charges_nonnegative = false;
  }
  result.trace = std::move(trace);
  return result;
}

namespace {

std::string canonical_assigned_key(const AssignedGraph& ag) {
  int n = ag.vertex_count();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : ag.graph.edges()) {
      int pu = perm[static_cast<size_t>(u)], pv = perm[static_cast<size_t>(v)];
      edges.emplace_back(std::min(pu, pv), std::max(pu, pv));
    }
    std::sort(edges.begin(), edges.end());
    std::string key = std::to_string(n) + "|";
    for (auto [u, v] : edges) {
      key += std::to_string(u) + "," + std::to_string(v) + ";";
    }
    key += "|";
    std::string labels(static_cast<size_t>(n), '?');
    for (int v = 0; v < n; ++v) {
      labels[static_cast<size_t>(perm[static_cast<size_t>(v)])] =
          label_letter(ag.label(v));
    }
    key += labels;
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<AssignedGraph> enumerate_low_potential_configs() {
  std::vector<AssignedGraph> found;
  std::set<std::string> seen;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    int pair_count = static_cast<int>(pairs.size());
    for (uint32_t edge_mask = 0; edge_mask < (uint32_t{1} << pair_count);
         ++edge_mask) {
      int m = std::popcount(edge_mask);
      if (n + m > 4) continue;
      Graph g(n);
      for (int i = 0; i < pair_count; ++i) {
        if ((edge_mask >> i) & 1) g.add_edge(pairs[static_cast<size_t>(i)].first,
                                             pairs[static_cast<size_t>(i)].second);
      }
      std::vector<VertexLabel> labels(static_cast<size_t>(n), VertexLabel::I);
      const VertexLabel choices[3] = {VertexLabel::I, VertexLabel::F,
                                      VertexLabel::U};
      int label_combos = 1;
      for (int i = 0; i < n; ++i) label_combos *= 3;
      for (int combo = 0; combo < label_combos; ++combo) {
        int rest = combo;
        for (int v = 0; v < n; ++v) {
          labels[static_cast<size_t>(v)] = choices[rest % 3];
          rest /= 3;
        }
        AssignedGraph ag{g, labels};
        PotentialWitness min = brute_force_min_potential(ag);
        if (min.value <= 0) continue;
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        long long rho = potential(ag, all);
        if (rho >= 3) continue;
        if (seen.insert(canonical_assigned_key(ag)).second) {
          found.push_back(std::move(ag));
        }
      }
    }
  }
  return found;
}

}  // namespace ifpart
