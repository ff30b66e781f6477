#pragma once

#include <string>
#include <vector>

#include "pgsp/planar_graph.hpp"

namespace pgsp {

struct Region {
  int id = 0;
  int height = 0;
  int parent = -1;
  std::vector<int> children;
  std::vector<int> edges;     // edge ids, both darts of an edge belong to the region
  std::vector<int> vertices;  // sorted
  // Boundary vertices grouped by hole, each hole in face-walk order starting
  // at its lowest-id vertex. Every boundary vertex appears in exactly one hole.
  std::vector<std::vector<int>> holes;
  std::vector<int> boundary;  // holes concatenated
};

struct DivisionOptions {
  // Kept as boundary vertices of every region that contains them.
  std::vector<int> mandatory;
  // A face of g that every region touching it treats as a hole (-1: none).
  int designated_face = -1;
  // Split a piece further while its boundary exceeds c * sqrt(limit); 0 disables.
  double boundary_budget = 8.0;
  // Regions with more holes are counted in RecursiveDivision::over_hole_budget.
  int hole_budget = 4;
};

struct RecursiveDivision {
  // r_vector[i - 1] = r_i; the last height holds the single root region.
  std::vector<int> r_vector;
  std::vector<Region> regions;
  int root = -1;
  std::vector<std::vector<int>> at_height;  // region ids by height, [0] unused
  // Largest height at which v is a boundary vertex, 0 if never.
  std::vector<int> vertex_height;
  std::vector<bool> mandatory;
  // Diagnostics.
  int max_regions_per_vertex = 0;  // over all heights >= 1
  int max_holes = 0;
  int over_hole_budget = 0;

  int num_heights() const { return static_cast<int>(r_vector.size()); }
};

// r_1 = r, r_i = r_{i-1}^2 until r_k >= n. Throws BadParams for r < 4.
std::vector<int> r_vector_for(int n, int r);

// Top-down recursive edge partition: each height-i region has at most r_i
// vertices (when splitting succeeds) and is nested in one height-(i+1) region.
RecursiveDivision recursive_division(const EmbeddedPlanarGraph& g, int r,
                                     const DivisionOptions& opts = {});

// Same construction with exactly two levels (r, then the root); returns the
// height-1 regions.
RecursiveDivision r_division(const EmbeddedPlanarGraph& g, int r,
                             const DivisionOptions& opts = {});

// One line per region: "R <id> <height> <parent> | verts | hole;hole".
std::string dump_division(const RecursiveDivision& div);

}  // namespace pgsp
