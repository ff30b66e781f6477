#pragma once

#include <vector>

#include "pgsp/planar_graph.hpp"
#include "pgsp/types.hpp"

namespace pgsp {

// Exact single-source distances; unreachable vertices get kInf. Darts of
// length >= kInf are treated as absent. Throws NegativeLength.
std::vector<Weight> dijkstra(const EmbeddedPlanarGraph& g, int s);

// Reference oracle, O(VE).
std::vector<Weight> bellman_ford(const EmbeddedPlanarGraph& g, int s);

// Plain arc list used for explicit oracles over derived graphs.
struct Arc {
  int from;
  int to;
  Weight len;
};

std::vector<Weight> dijkstra_arcs(int n, const std::vector<Arc>& arcs, int s);

}  // namespace pgsp
