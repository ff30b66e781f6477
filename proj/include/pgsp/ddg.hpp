#pragma once

#include <string>
#include <vector>

#include "pgsp/dijkstra.hpp"
#include "pgsp/division.hpp"
#include "pgsp/monge.hpp"

namespace pgsp {

// Complete bipartite piece of one hole: rows are the A positions [a_lo, a_hi),
// columns the B positions [b_lo, b_hi), both relative to the hole.
struct Piece {
  int hole = 0;
  int a_lo = 0, a_hi = 0;
  int b_lo = 0, b_hi = 0;
  int a_size() const { return a_hi - a_lo; }
  int b_size() const { return b_hi - b_lo; }
};

struct HoleSpan {
  int offset = 0;  // first index in DenseDistanceGraph::boundary
  int size = 0;
  bool monge = true;  // false: all pairs of this hole are explicit arcs
};

struct ExplicitArc {
  int from = 0;  // boundary indices
  int to = 0;
  Weight len = 0;
};

struct DenseDistanceGraph {
  int region = -1;
  std::vector<int> boundary;  // vertex ids, holes concatenated in cyclic order
  std::vector<int> hole_of;   // per boundary index
  std::vector<HoleSpan> holes;
  DenseMatrix dist;           // dist.at(x, y): region distance boundary[x] -> boundary[y]
  std::vector<Piece> pieces;
  std::vector<ExplicitArc> explicit_arcs;

  int size() const { return static_cast<int>(boundary.size()); }
  MongeView piece_view(const Piece& p) const;
};

// One Dijkstra inside the region per boundary vertex, then the bipartite
// decomposition of every hole that passes the Monge check. Pairs on
// different holes, and all pairs of failing holes, become explicit arcs.
DenseDistanceGraph build_ddg(const EmbeddedPlanarGraph& g, const Region& region);

// DDGs of all height-1 regions, in the order of div.at_height[1].
std::vector<DenseDistanceGraph> build_ddgs(const EmbeddedPlanarGraph& g, const RecursiveDivision& div);

// Recursive halving of positions [0, k): pieces (A, B) and (B, A) per split.
std::vector<Piece> bipartite_decompose(int hole, int k);

// Upper (col > row) and lower (col < row) triangles of one hole's matrix,
// completed. Throws MongeViolation if either fails the Monge check.
std::pair<MongeView, MongeView> triangle_views(const DenseDistanceGraph& ddg, int hole);

// Arc list over vertex ids: every finite DDG entry of every region.
std::vector<Arc> ddg_union_arcs(const std::vector<DenseDistanceGraph>& ddgs);

// "ddg <region> <k>" followed by k matrix rows ("inf" for unreachable).
std::string dump_ddg(const DenseDistanceGraph& ddg);

}  // namespace pgsp
