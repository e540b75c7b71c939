#include "ifpart/solver.hpp"

#include <algorithm>
#include <numeric>

namespace ifpart {

namespace {

// Union-find with undo (no path compression) for incremental forest checks.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) const {
    while (parent_[static_cast<size_t>(v)] != v) v = parent_[static_cast<size_t>(v)];
    return v;
  }

  // Returns false (and records nothing) if already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
    history_.push_back({a, b});
    return true;
  }

  size_t mark() const { return history_.size(); }

  void rollback(size_t mark) {
    while (history_.size() > mark) {
      auto [a, b] = history_.back();
      history_.pop_back();
      parent_[static_cast<size_t>(b)] = b;
      size_[static_cast<size_t>(a)] -= size_[static_cast<size_t>(b)];
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> history_;
};

enum Side : int { kUnset = -1, kIndependent = 0, kForest = 1 };

class Backtracker {
 public:
  Backtracker(const AssignedGraph& ag, const SolveOptions& options,
              SolveStats& stats)
      : ag_(ag), options_(options), stats_(stats),
        side_(static_cast<size_t>(ag.vertex_count()), kUnset),
        dsu_(ag.vertex_count()) {
    order_.resize(static_cast<size_t>(ag.vertex_count()));
    std::iota(order_.begin(), order_.end(), 0);
    // Preassigned vertices first (no branching), then by descending degree.
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      bool fa = ag_.label(a) != VertexLabel::U;
      bool fb = ag_.label(b) != VertexLabel::U;
      if (fa != fb) return fa;
      return ag_.graph.degree(a) > ag_.graph.degree(b);
    });
  }

  SolveResult run() {
    SolveResult result;
    if (search(0)) {
      std::vector<bool> mask(static_cast<size_t>(ag_.vertex_count()));
      for (int v = 0; v < ag_.vertex_count(); ++v) {
        mask[static_cast<size_t>(v)] = side_[static_cast<size_t>(v)] == kIndependent;
      }
      result.outcome = SolveResult::Outcome::kSat;
      result.partition = Partition::from_mask(mask);
    } else {
      result.outcome = stats_.capped ? SolveResult::Outcome::kInconclusive
                                     : SolveResult::Outcome::kUnsat;
    }
    result.stats = stats_;
    return result;
  }

 private:
  bool feasible_independent(int v) const {
    for (int w : ag_.graph.neighbors(v)) {
      if (side_[static_cast<size_t>(w)] == kIndependent) return false;
      for (int x : ag_.graph.neighbors(w)) {
        if (x != v && side_[static_cast<size_t>(x)] == kIndependent) return false;
      }
    }
    return true;
  }

  bool search(size_t position) {
    if (stats_.capped) return false;
    if (position == order_.size()) return true;
    if (++stats_.nodes > options_.node_cap) {
      stats_.capped = true;
      return false;
    }
    int v = order_[position];
    VertexLabel label = ag_.label(v);

    if (label != VertexLabel::I) {  // forest side, the permissive branch
      size_t mark = dsu_.mark();
      bool cycle = false;
      side_[static_cast<size_t>(v)] = kForest;
      for (int w : ag_.graph.neighbors(v)) {
        if (side_[static_cast<size_t>(w)] == kForest && !dsu_.unite(v, w)) {
          cycle = true;
          break;
        }
      }
      if (!cycle && search(position + 1)) return true;
      dsu_.rollback(mark);
      side_[static_cast<size_t>(v)] = kUnset;
    }
    if (label != VertexLabel::F) {
      if (feasible_independent(v)) {
        side_[static_cast<size_t>(v)] = kIndependent;
        if (search(position + 1)) return true;
        side_[static_cast<size_t>(v)] = kUnset;
      }
    }
    return false;
  }

  const AssignedGraph& ag_;
  const SolveOptions& options_;
  SolveStats& stats_;
  std::vector<int> side_;
  std::vector<int> order_;
  RollbackDsu dsu_;
};

// Deletes `deleted` vertices and relabels `to_forest` (U -> F) in one pass.
struct Shrunk {
  AssignedGraph reduced;
  std::vector<int> reduced_to_original;
};

Shrunk shrink(const AssignedGraph& ag, const std::vector<int>& deleted,
              const std::vector<int>& to_forest) {
  std::vector<char> gone(static_cast<size_t>(ag.vertex_count()), 0);
  for (int v : deleted) gone[static_cast<size_t>(v)] = 1;
  Shrunk out;
  for (int v = 0; v < ag.vertex_count(); ++v) {
    if (!gone[static_cast<size_t>(v)]) out.reduced_to_original.push_back(v);
  }
  out.reduced.graph = ag.graph.induced(out.reduced_to_original);
  out.reduced.labels.reserve(out.reduced_to_original.size());
  for (int v : out.reduced_to_original) {
    out.reduced.labels.push_back(ag.label(v));
  }
  for (int v : to_forest) {
    auto it = std::lower_bound(out.reduced_to_original.begin(),
                               out.reduced_to_original.end(), v);
    if (it == out.reduced_to_original.end() || *it != v) {
      throw std::logic_error("relabel target was deleted");
    }
    size_t index =
        static_cast<size_t>(it - out.reduced_to_original.begin());
    if (out.reduced.labels[index] == VertexLabel::U) {
      out.reduced.labels[index] = VertexLabel::F;
    }
  }
  return out;
}

int priority(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::kDegenerateIsolated: return 0;
    case ConfigKind::kC1: return 1;
    case ConfigKind::kCl6DeleteLeaf: return 2;
    case ConfigKind::kDegenerateAllUCycle: return 3;
    case ConfigKind::kC2: return 4;
    case ConfigKind::kC3: return 5;
    case ConfigKind::kCl6Contract: return 6;
    case ConfigKind::kCl7: return 7;
    case ConfigKind::kCl8: return 8;
    case ConfigKind::kCl9: return 9;
  }
  return 100;
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

std::optional<ReductionStep> reduce_configuration(
    const AssignedGraph& ag, const ConfigurationReport& config) {
  ag.validate();
  const Graph& g = ag.graph;
  ReductionStep step;
  step.kind_ = config.kind;
  step.original_ = ag;
  step.anchor_ = config.anchor;
  std::vector<int> to_forest;

  switch (config.kind) {
    case ConfigKind::kC1:
      require(g.degree(config.anchor) == 1 &&
                  ag.label(config.anchor) == VertexLabel::U,
              "stale C1 configuration");
      step.deleted_ = {config.anchor};
      step.unsat_propagates_ = true;
      break;
    case ConfigKind::kCl6DeleteLeaf:
      require(g.degree(config.anchor) == 1 &&
                  ag.label(config.anchor) == VertexLabel::F,
              "stale CL6_DELETE configuration");
      step.deleted_ = {config.anchor};
      step.unsat_propagates_ = true;
      break;
    case ConfigKind::kDegenerateIsolated:
      require(g.degree(config.anchor) == 0, "stale isolated-vertex configuration");
      step.deleted_ = {config.anchor};
      step.unsat_propagates_ = true;
      break;
    case ConfigKind::kDegenerateAllUCycle:
      for (int v : config.vertices) {
        require(g.degree(v) == 2 && ag.label(v) == VertexLabel::U,
                "stale all-U-cycle configuration");
      }
      step.deleted_ = config.vertices;
      step.unsat_propagates_ = true;
      break;
    case ConfigKind::kC2: {
      require(!config.threads.empty() && config.threads[0].length() >= 3,
              "stale C2 configuration");
      const Thread& t = config.threads[0];
      int mid = -1;
      for (int i = 1; i + 1 < t.length(); ++i) {
        if (t.internal[static_cast<size_t>(i)] == config.anchor) mid = i;
      }
      require(mid >= 0, "C2 anchor is not an interior thread vertex");
      int center = t.internal[static_cast<size_t>(mid)];
      int left = t.internal[static_cast<size_t>(mid - 1)];
      int right = t.internal[static_cast<size_t>(mid + 1)];
      auto other_neighbor = [&](int vertex, int not_this) {
        const auto& nbrs = g.neighbors(vertex);
        return nbrs[0] == not_this ? nbrs[1] : nbrs[0];
      };
      step.deleted_ = {left, center, right};
      step.case_vertices_ = {center, left, right, other_neighbor(left, center),
                             other_neighbor(right, center)};
      step.unsat_propagates_ = true;
      break;
    }
    case ConfigKind::kC3:
    case ConfigKind::kCl8:
    case ConfigKind::kCl9: {
      require(ag.label(config.anchor) == VertexLabel::U, "stale configuration");
      step.deleted_ = config.vertices;  // anchor plus thread internals
      step.unsat_propagates_ = config.kind == ConfigKind::kC3;
      if (config.kind == ConfigKind::kCl8 || config.kind == ConfigKind::kCl9) {
        // Reassign the far borders that sit in U, per the reassignment lemma.
        for (const Thread& t : config.threads) {
          if (t.length() != 1) continue;
          for (int b : {t.borders[0], t.borders[1]}) {
            if (b != config.anchor && ag.label(b) == VertexLabel::U) {
              to_forest.push_back(b);
            }
          }
        }
        if (config.kind == ConfigKind::kCl8) {
          require(config.threads.size() == 3, "stale CL8 configuration");
        }
      }
      break;
    }
    case ConfigKind::kCl6Contract: {
      int v = config.anchor;
      require(g.degree(v) == 2 && ag.label(v) == VertexLabel::F,
              "stale CL6_CONTRACT configuration");
      int u = g.neighbors(v)[0];
      int w = g.neighbors(v)[1];
      require(!g.has_edge(u, w),
              "CL6_CONTRACT requires non-adjacent neighbors of the 2-vertex");
      Shrunk shrunk = shrink(ag, {v}, {});
      auto reduced_index = [&](int orig) {
        return static_cast<int>(
            std::lower_bound(shrunk.reduced_to_original.begin(),
                             shrunk.reduced_to_original.end(), orig) -
            shrunk.reduced_to_original.begin());
      };
      shrunk.reduced.graph.add_edge(reduced_index(u), reduced_index(w));
      step.deleted_ = {v};
      step.reduced_ = std::move(shrunk.reduced);
      step.reduced_to_original_ = std::move(shrunk.reduced_to_original);
      step.unsat_propagates_ = false;
      return step;
    }
    case ConfigKind::kCl7: {
      require(!config.threads.empty() && config.threads[0].length() == 2,
              "stale CL7 configuration");
      const Thread& t = config.threads[0];
      int v = config.anchor;
      if (t.closed) {
        step.deleted_ = {v, t.internal[0], t.internal[1]};
        step.case_vertices_ = {v, t.internal[0], t.internal[1]};
        for (int a : g.neighbors(v)) {
          if (a != t.internal[0] && a != t.internal[1] &&
              ag.label(a) == VertexLabel::U) {
            to_forest.push_back(a);
          }
        }
      } else {
        int near = t.borders[0] == v ? t.internal[0] : t.internal[1];
        int far_internal = t.borders[0] == v ? t.internal[1] : t.internal[0];
        int far_border = t.borders[0] == v ? t.borders[1] : t.borders[0];
        step.deleted_ = {t.internal[0], t.internal[1]};
        step.case_vertices_ = {v, far_border, near, far_internal};
        for (int a : g.neighbors(v)) {
          if (a != near && ag.label(a) == VertexLabel::U) to_forest.push_back(a);
        }
      }
      break;
    }
  }

  Shrunk shrunk = shrink(ag, step.deleted_, to_forest);
  step.reduced_ = std::move(shrunk.reduced);
  step.reduced_to_original_ = std::move(shrunk.reduced_to_original);
  return step;
}

Partition ReductionStep::extend(const Partition& reduced_partition) const {
  std::vector<Violation> input_check =
      verify_if_partition(reduced_, reduced_partition);
  if (!input_check.empty()) {
    throw std::invalid_argument("extend: reduced partition invalid: " +
                                input_check.front().detail);
  }
  int n = original_.vertex_count();
  std::vector<bool> independent(static_cast<size_t>(n), false);
  std::vector<char> placed(static_cast<size_t>(n), 0);
  for (int rv : reduced_partition.independent) {
    int ov = reduced_to_original_[static_cast<size_t>(rv)];
    independent[static_cast<size_t>(ov)] = true;
    placed[static_cast<size_t>(ov)] = 1;
  }
  for (int rv : reduced_partition.forest) {
    placed[static_cast<size_t>(reduced_to_original_[static_cast<size_t>(rv)])] = 1;
  }
  auto on_independent = [&](int ov) { return independent[static_cast<size_t>(ov)]; };

  switch (kind_) {
    case ConfigKind::kC1:
    case ConfigKind::kCl6DeleteLeaf:
      break;  // deleted vertex joins the forest side
    case ConfigKind::kCl6Contract:
      break;  // the contracted 2-vertex joins the forest side
    case ConfigKind::kDegenerateIsolated:
      if (original_.label(anchor_) == VertexLabel::I) {
        independent[static_cast<size_t>(anchor_)] = true;
      }
      break;
    case ConfigKind::kDegenerateAllUCycle:
      independent[static_cast<size_t>(anchor_)] = true;
      break;
    case ConfigKind::kC2: {
      int center = case_vertices_[0];
      int outer_a = case_vertices_[3];
      int outer_b = case_vertices_[4];
      if (!on_independent(outer_a) && !on_independent(outer_b)) {
        independent[static_cast<size_t>(center)] = true;
      }
      break;
    }
    case ConfigKind::kC3:
    case ConfigKind::kCl8:
    case ConfigKind::kCl9:
      independent[static_cast<size_t>(anchor_)] = true;
      break;
    case ConfigKind::kCl7: {
      if (case_vertices_.size() == 3) {  // closed: v, near internal, far internal
        independent[static_cast<size_t>(case_vertices_[1])] = true;
      } else {  // open: v, far border, near internal, far internal
        if (!on_independent(case_vertices_[0]) &&
            !on_independent(case_vertices_[1])) {
          independent[static_cast<size_t>(case_vertices_[2])] = true;
        }
      }
      break;
    }
  }
  for (int v : deleted_) placed[static_cast<size_t>(v)] = 1;
  for (int v = 0; v < n; ++v) {
    if (!placed[static_cast<size_t>(v)]) {
      throw std::logic_error("extend: vertex left unplaced");
    }
  }
  Partition out = Partition::from_mask(independent);
  std::vector<Violation> output_check = verify_if_partition(original_, out);
  if (!output_check.empty()) {
    throw std::logic_error("extend: extension failed verification: " +
                           output_check.front().detail);
  }
  return out;
}

namespace {

SolveResult solve_impl(const AssignedGraph& ag, const SolveOptions& options,
                       SolveStats& stats) {
  if (ag.vertex_count() == 0) {
    return {SolveResult::Outcome::kSat, Partition{}, stats};
  }
  if (options.use_reductions) {
    std::vector<ConfigurationReport> configs = detect_configurations(ag);
    std::stable_sort(configs.begin(), configs.end(),
                     [](const ConfigurationReport& a, const ConfigurationReport& b) {
                       return priority(a.kind) < priority(b.kind);
                     });
    for (const ConfigurationReport& config : configs) {
      std::optional<ReductionStep> step;
      try {
        step = reduce_configuration(ag, config);
      } catch (const std::invalid_argument&) {
        continue;  // e.g. a CL6_CONTRACT with adjacent neighbors
      }
      if (!step) continue;
      ++stats.reductions;
      SolveResult sub = solve_impl(step->reduced(), options, stats);
      if (sub.outcome == SolveResult::Outcome::kSat) {
        Partition extended = step->extend(*sub.partition);
        return {SolveResult::Outcome::kSat, std::move(extended), stats};
      }
      if (sub.outcome == SolveResult::Outcome::kInconclusive) {
        return {SolveResult::Outcome::kInconclusive, std::nullopt, stats};
      }
      if (step->unsat_propagates()) {
        return {SolveResult::Outcome::kUnsat, std::nullopt, stats};
      }
      break;  // label-changing reduction failed: fall back to backtracking
    }
  }
  return Backtracker(ag, options, stats).run();
}

}  // namespace

SolveResult solve_if_partition(const AssignedGraph& ag,
                               const SolveOptions& options) {
  ag.validate();
  SolveStats stats;
  SolveResult result = solve_impl(ag, options, stats);
  result.stats = stats;
  if (result.outcome == SolveResult::Outcome::kSat) {
    std::vector<Violation> check = verify_if_partition(ag, *result.partition);
    if (!check.empty()) {
      throw std::logic_error("solver produced an invalid partition: " +
                             check.front().detail);
    }
  }
  return result;
}

}  // namespace ifpart
