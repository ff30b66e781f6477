#pragma once

#include <string>
#include <vector>

#include "pgsp/hkrs.hpp"
#include "pgsp/planar_graph.hpp"

namespace pgsp {

// Capacities live on the darts of `graph`; dart d and d^1 share an edge.
struct FlowNetwork {
  EmbeddedPlanarGraph graph;
  int s = 0;
  int t = 0;
};

// The s-t path laid through the faces crossed by a curve from s to t.
struct EmbeddedPath {
  std::vector<int> vertices;  // v_0 = s .. v_p = t
  std::vector<int> faces;     // faces[i - 1]: face of the input graph holding edge v_{i-1} v_i
  std::vector<int> forward;   // forward[i - 1]: dart v_{i-1} -> v_i of the added edge
  int p() const { return static_cast<int>(forward.size()); }
};

// Fewest faces a curve from s to t must cross, by BFS over the vertex-face
// incidence graph, followed by one new edge per crossed face. Path darts get
// capacity 0 forward and `back_cap` backward. The input edges keep their ids;
// path edges are appended. Throws BadParams if s == t or t is unreachable.
EmbeddedPath embed_st_path(EmbeddedPlanarGraph& g, int s, int t, Weight back_cap);

// Shortest distances in the dual from the face left of `return_dart`, where
// the dual arc of dart d (left face -> right face) has length residual[d].
// Throws NegativeResidual.
std::vector<Weight> hassin_potential(const EmbeddedPlanarGraph& g, const std::vector<Weight>& residual,
                                     int return_dart);

// f_pi(d) = pi(right face of d) - pi(left face of d).
Weight potential_flow(const EmbeddedPlanarGraph& g, const std::vector<Weight>& pi, int d);

struct FlowOptions {
  // Apply the p < sqrt(n) / log^3 n guard of the fast variant; when false the
  // division path is always taken.
  bool guard = true;
  Backend backend = Backend::kCq3;
};

struct FlowResult {
  Weight value = 0;
  std::vector<Weight> flow;  // per dart of the input graph
  int p = 0;
  int r = 0;                 // region size of the fast variant, 0 otherwise
  bool fast = false;         // division path taken
  int corrections = 0;       // iterations that first pushed surplus back
  SsspCounters counters;     // summed over the per-iteration searches
};

// One bounded planar flow per path edge, each solved by a full dual Dijkstra.
FlowResult max_flow_basic(const FlowNetwork& net);

// Same iteration on the dual DDG with the accumulated potential as prices.
// Delegates to max_flow_basic when the guard fails.
FlowResult max_flow_fast(const FlowNetwork& net, const FlowOptions& opts = {});

// Net flow into v (incoming minus outgoing).
std::vector<Weight> excess(const EmbeddedPlanarGraph& g, const std::vector<Weight>& flow);

// Removes positive-flow cycles, then returns every excess except at s and t
// back toward s along a topological order of the positive-flow arcs.
// Throws BadInput for a negative excess, CyclicAfterCancellation if cycles remain.
std::vector<Weight> preflow_to_flow(const EmbeddedPlanarGraph& g, int s, int t, std::vector<Weight> flow);

// Cancels positive-flow cycles in place; returns the number cancelled.
int cancel_flow_cycles(const EmbeddedPlanarGraph& g, std::vector<Weight>& flow);

// Edmonds-Karp oracle; returns the value and fills `flow` when given.
Weight max_flow_bfs(const EmbeddedPlanarGraph& g, int s, int t, std::vector<Weight>* flow = nullptr);

// Empty when `flow` is antisymmetric, within capacity and conserved away from
// s and t; otherwise a description of the first failure.
std::string check_flow(const EmbeddedPlanarGraph& g, int s, int t, const std::vector<Weight>& flow);

// Capacity of the cut around the vertices reachable from s in the residual
// graph; equals the flow value exactly when the flow is maximum. Returns kInf
// if t is reachable.
Weight residual_cut_capacity(const EmbeddedPlanarGraph& g, int s, int t, const std::vector<Weight>& flow);

Weight flow_value(const EmbeddedPlanarGraph& g, int t, const std::vector<Weight>& flow);

}  // namespace pgsp
