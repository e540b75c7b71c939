#include "ifpart/gadgets.hpp"

#include <numeric>
#include <stdexcept>

namespace ifpart {

namespace {

// Copies ag into a graph with `extra` appended U vertices.
GadgetExpansion grown_copy(const AssignedGraph& ag, int extra) {
  GadgetExpansion out;
  int n = ag.vertex_count();
  out.result.graph = Graph(n + extra);
  for (auto [u, v] : ag.graph.edges()) out.result.graph.add_edge(u, v);
  out.result.labels = ag.labels;
  out.result.labels.resize(static_cast<size_t>(n + extra), VertexLabel::U);
  out.vertex_map.resize(static_cast<size_t>(n));
  std::iota(out.vertex_map.begin(), out.vertex_map.end(), 0);
  return out;
}

}  // namespace

GadgetExpansion attach_f_gadget(const AssignedGraph& ag, int v) {
  ag.validate();
  if (v < 0 || v >= ag.vertex_count() || ag.label(v) != VertexLabel::F) {
    throw std::invalid_argument("attach_f_gadget: vertex must carry label F");
  }
  GadgetExpansion out = grown_copy(ag, 3);
  int a = ag.vertex_count();
  int b = a + 1;
  int c = a + 2;
  out.result.graph.add_edge(a, b);
  out.result.graph.add_edge(b, c);
  out.result.graph.add_edge(c, a);
  out.result.graph.add_edge(v, a);
  out.result.labels[static_cast<size_t>(v)] = VertexLabel::U;
  out.registry.push_back({v, VertexLabel::F, {a, b, c}});
  return out;
}

GadgetExpansion attach_i_gadget(const AssignedGraph& ag, int v) {
  ag.validate();
  if (v < 0 || v >= ag.vertex_count() || ag.label(v) != VertexLabel::I) {
    throw std::invalid_argument("attach_i_gadget: vertex must carry label I");
  }
  GadgetExpansion out = grown_copy(ag, 8);
  int base = ag.vertex_count();
  int a = base, b = base + 1, c = base + 2, d = base + 3;
  int e = base + 4, f = base + 5, g = base + 6, h = base + 7;
  out.result.graph.add_edge(a, b);
  out.result.graph.add_edge(b, c);
  out.result.graph.add_edge(c, a);
  out.result.graph.add_edge(f, g);
  out.result.graph.add_edge(g, h);
  out.result.graph.add_edge(h, f);
  out.result.graph.add_edge(a, d);
  out.result.graph.add_edge(d, e);
  out.result.graph.add_edge(e, f);
  out.result.graph.add_edge(v, d);
  out.result.graph.add_edge(v, e);
  out.result.labels[static_cast<size_t>(v)] = VertexLabel::U;
  out.registry.push_back({v, VertexLabel::I, {a, b, c, d, e, f, g, h}});
  return out;
}

GadgetExpansion expand_to_unassigned(const AssignedGraph& ag) {
  ag.validate();
  GadgetExpansion out;
  out.result = ag;
  out.vertex_map.resize(static_cast<size_t>(ag.vertex_count()));
  std::iota(out.vertex_map.begin(), out.vertex_map.end(), 0);
  for (int v : ag.vertices_with(VertexLabel::F)) {
    GadgetExpansion step = attach_f_gadget(out.result, v);
    out.result = std::move(step.result);
    out.registry.push_back(std::move(step.registry.front()));
  }
  for (int v : ag.vertices_with(VertexLabel::I)) {
    GadgetExpansion step = attach_i_gadget(out.result, v);
    out.result = std::move(step.result);
    out.registry.push_back(std::move(step.registry.front()));
  }
  return out;
}

SharpnessGraph sharpness_graph(int k) {
  if (k < 3) {
    throw std::invalid_argument("sharpness_graph: cycle length must be >= 3");
  }
  SharpnessGraph out;
  out.cycle_length = k;
  out.result = Graph(4 * k);
  for (int v = 0; v < k; ++v) {
    out.result.add_edge(v, (v + 1) % k);
    int a = k + 3 * v;
    out.result.add_edge(a, a + 1);
    out.result.add_edge(a + 1, a + 2);
    out.result.add_edge(a + 2, a);
    out.result.add_edge(v, a);
  }
  return out;
}

}  // namespace ifpart
