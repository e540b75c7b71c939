#pragma once

#include <vector>

#include "ifpart/assigned.hpp"

namespace ifpart {

/// One gadget attachment: which host vertex it anchors to, which label it
/// replaces, and the added vertices in role order (a,b,c or a..h).
struct GadgetRecord {
  int host;
  VertexLabel replaced;  // F or I
  std::vector<int> added;
};

struct GadgetExpansion {
  AssignedGraph result;
  std::vector<int> vertex_map;  // original vertex -> same vertex in result
  std::vector<GadgetRecord> registry;
};

/// Attaches a triangle a,b,c plus the edge v-a to an F-labeled vertex v and
/// relabels everything touched to U. Adds 3 vertices and 4 edges. Throws
/// std::invalid_argument unless label(v) = F.
GadgetExpansion attach_f_gadget(const AssignedGraph& ag, int v);

/// Attaches triangles a,b,c and f,g,h joined by the path a-d-e-f, plus edges
/// v-d and v-e, to an I-labeled vertex v; relabels everything touched to U.
/// Adds 8 vertices and 11 edges. Throws std::invalid_argument unless
/// label(v) = I.
GadgetExpansion attach_i_gadget(const AssignedGraph& ag, int v);

/// Replaces every F label with an F-gadget (ascending host order), then every
/// I label with an I-gadget, yielding an all-U instance whose partitions
/// restrict to partitions of the input extending its assignment. Original
/// vertex indices are preserved; gadget vertices are appended.
GadgetExpansion expand_to_unassigned(const AssignedGraph& ag);

struct SharpnessGraph {
  int cycle_length;
  Graph result;
};

/// Cycle v_0..v_{k-1} with a pendant triangle a,b,c hung from each cycle
/// vertex by the edge v-a. 4k vertices, 5k edges; maximum average degree
/// exactly 5/2 yet no partition into a 2-independent set and a forest.
/// Vertex layout: cycle vertices 0..k-1, then a,b,c per cycle vertex in
/// ascending order (vertex v's triangle is k+3v .. k+3v+2).
/// Throws std::invalid_argument if k < 3.
SharpnessGraph sharpness_graph(int k);

}  // namespace ifpart
