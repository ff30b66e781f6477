#pragma once

#include <vector>

#include "pgsp/types.hpp"

namespace pgsp {

// One undirected embedded edge. Dart 2e runs u->v, dart 2e+1 runs v->u.
struct EdgeSpec {
  int u = 0;
  int v = 0;
  Weight len_uv = 0;
  Weight len_vu = 0;
  Weight cap_uv = 0;
  Weight cap_vu = 0;
};

// Combinatorially embedded directed planar graph. Darts come in reverse
// pairs (d, d^1); rotation(v) lists the darts leaving v in CCW order.
// Faces are traced with next(d) = rot_next(rev(d)), so face_of(d) is the
// face to the right of d.
class EmbeddedPlanarGraph {
 public:
  EmbeddedPlanarGraph() = default;

  int num_vertices() const { return n_; }
  int num_darts() const { return static_cast<int>(head_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  static int rev(int d) { return d ^ 1; }
  int head(int d) const { return head_[d]; }
  int tail(int d) const { return head_[d ^ 1]; }
  Weight length(int d) const { return len_[d]; }
  Weight capacity(int d) const { return cap_[d]; }
  void set_length(int d, Weight w) { len_[d] = w; }
  void set_capacity(int d, Weight c) { cap_[d] = c; }

  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  int max_degree() const;
  int rot_next(int d) const;
  int rot_prev(int d) const;
  int face_next(int d) const { return rot_next(rev(d)); }

  int face_of(int d) const { return face_of_[d]; }
  int right_face(int d) const { return face_of_[d]; }
  int left_face(int d) const { return face_of_[d ^ 1]; }
  const std::vector<int>& face_darts(int f) const { return faces_[f]; }

  // Number of connected components that contain at least one edge.
  int edge_components() const;

  // Adds an edge u->v inside the face containing darts du and dv, where
  // head(du) = u and head(dv) = v and both darts lie on the same face.
  // Parallel edges are allowed here. Returns the new u->v dart.
  int insert_edge_in_face(int du, int dv, Weight len_uv, Weight len_vu,
                          Weight cap_uv, Weight cap_vu);

  // Removes the most recently inserted edges until num_edges() == m.
  void truncate_edges(int m);

  friend EmbeddedPlanarGraph build_graph_darts(int, const std::vector<EdgeSpec>&,
                                               const std::vector<std::vector<int>>&, bool);
  friend EmbeddedPlanarGraph dual_graph(const EmbeddedPlanarGraph&);

 private:
  void rebuild_faces();

  int n_ = 0;
  std::vector<int> head_;
  std::vector<Weight> len_;
  std::vector<Weight> cap_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> rot_pos_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> faces_;
};

// Builds and validates an embedding. rotation[v] lists the edge indices
// incident to v in CCW order (a self-loop appears twice). Throws
// InvalidRotation or NonPlanarEmbedding. Parallel edges and self-loops are
// rejected unless allow_multi is set.
EmbeddedPlanarGraph build_graph(int n, const std::vector<EdgeSpec>& edges,
                                const std::vector<std::vector<int>>& rotation,
                                bool allow_multi = false);

// Same as build_graph, but rotation[v] lists dart ids (2e for u->v of edge e,
// 2e+1 for v->u). Needed when self-loops make edge indices ambiguous.
EmbeddedPlanarGraph build_graph_darts(int n, const std::vector<EdgeSpec>& edges,
                                      const std::vector<std::vector<int>>& rotation,
                                      bool allow_multi = false);

// Dual graph: vertex f per primal face; dual dart d runs from left_face(d)
// to right_face(d). Lengths and capacities are copied from the primal dart.
EmbeddedPlanarGraph dual_graph(const EmbeddedPlanarGraph& g);

struct DegreeReduction {
  EmbeddedPlanarGraph graph;
  // Original vertex v keeps id v; new path vertices map back to their origin.
  std::vector<int> origin;
};

// Replaces every vertex of degree d > 3 by a path of d - 2 vertices of degree
// 3 joined by zero-length darts in both directions. Distances between original vertices
// are preserved.
DegreeReduction reduce_degree(const EmbeddedPlanarGraph& g);

}  // namespace pgsp
