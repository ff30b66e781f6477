#pragma once

#include <vector>

#include "pgsp/hkrs.hpp"
#include "pgsp/planar_graph.hpp"

namespace pgsp {

enum class ApspPath { kAuto, kFast, kDijkstra };

struct FaceApspRequest {
  int face = -1;
  // Subset of the face's vertices, in any order; empty means all of them in
  // face-walk order.
  std::vector<int> vertices;
  ApspPath path = ApspPath::kAuto;
  Backend backend = Backend::kCq3;
};

struct FaceApspResult {
  std::vector<int> vertices;             // row/column order of dist
  std::vector<std::vector<Weight>> dist;  // dist[i][j]: vertices[i] -> vertices[j]
  bool fast = false;                     // r-division path taken
  int r = 0;                             // region size used by the fast path
  SsspCounters counters;                 // summed over the k runs
};

// Distinct vertices of face f in face-walk order. Throws FaceNotFound.
std::vector<int> face_vertices(const EmbeddedPlanarGraph& g, int f);

// r = k^2 * ceil(log2 k)^2, clamped to [4, n - 1].
int apsp_region_size(int k, int n);

// True when k < sqrt(n) / log2(n), the range where the division pays off.
bool apsp_guard(int k, int n);

// All-pairs distances among the chosen vertices of one face. The fast path
// divides g with those vertices kept as boundary and the face as a hole, then
// runs the region-heap search from each of them; the fallback runs one
// Dijkstra per vertex. Throws FaceNotFound, BadParams.
FaceApspResult face_boundary_apsp(const EmbeddedPlanarGraph& g, const FaceApspRequest& req);

}  // namespace pgsp
