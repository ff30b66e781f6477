#pragma once

#include <iosfwd>
#include <string>

#include "pgsp/planar_graph.hpp"

namespace pgsp {

// Text format:
//   pg <V> <A>
//   A arc lines      u v length [capacity]      (length may be "inf")
//   V rotation lines one per vertex, arc indices of the incident arcs in CCW
//                    order (one index per incident edge, either direction)
// Arcs u->v and v->u are paired into one embedded edge; a missing reverse
// arc is added with infinite length and zero capacity. Throws BadInput.
EmbeddedPlanarGraph read_graph(std::istream& in);
EmbeddedPlanarGraph read_graph_file(const std::string& path);

// Writes both darts of every edge, arc index = dart id.
void write_graph(std::ostream& out, const EmbeddedPlanarGraph& g, bool with_capacity);

struct FlowInstance {
  EmbeddedPlanarGraph graph;
  int s = 0;
  int t = 0;
};

// DIMACS-like max-flow input, 1-based:
//   c comment / p max V A / n s s / n t t / a u v cap / r v a1 a2 ...
// One r line per vertex lists its incident arcs in CCW order.
FlowInstance read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const FlowInstance& inst);

}  // namespace pgsp
