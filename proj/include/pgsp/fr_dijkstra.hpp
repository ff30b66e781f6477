#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "pgsp/ddg.hpp"
#include "pgsp/monge_heap.hpp"
#include "pgsp/monge_rmq.hpp"

namespace pgsp {

// One complete bipartite Monge piece with its rows and columns resolved to
// vertex ids.
struct HeapSpec {
  int ddg = 0;   // index into DdgIndex::ddgs
  int piece = 0; // index into that DDG's pieces
  Piece p;
  MongeView view;
  std::vector<int> row_vertex, col_vertex;
  std::shared_ptr<const NaiveMongeRMQ::Template> naive;
  std::shared_ptr<const DynamicMongeRMQ> dynamic;  // only when requested
};

struct Slot {
  int heap;
  int pos;
};

// The DDGs of one division, flattened into per-vertex lookup tables shared by
// every shortest-path run. Immutable after construction.
class DdgIndex {
 public:
  DdgIndex(std::vector<DenseDistanceGraph> ddgs, int num_vertices, bool with_dynamic = false);
  DdgIndex(const DdgIndex&) = delete;
  DdgIndex& operator=(const DdgIndex&) = delete;

  int num_vertices() const { return n_; }
  const std::vector<DenseDistanceGraph>& ddgs() const { return ddgs_; }
  const std::vector<HeapSpec>& heaps() const { return heaps_; }
  bool is_boundary(int v) const { return boundary_[v] != 0; }
  std::vector<int> boundary_vertices() const;
  const std::vector<Slot>& as_row(int v) const { return as_row_[v]; }
  const std::vector<Slot>& as_col(int v) const { return as_col_[v]; }
  // Explicit arcs leaving v: (head, length).
  const std::vector<std::pair<int, Weight>>& explicit_out(int v) const { return explicit_out_[v]; }
  // (ddg, hole) pairs whose boundary contains v, with v's position in the hole.
  struct HoleSlot {
    int ddg, hole, pos;
  };
  const std::vector<HoleSlot>& holes_of(int v) const { return holes_of_[v]; }
  int num_explicit() const { return num_explicit_; }
  // Completed (upper, lower) triangles of a Monge hole of size >= 2.
  const std::optional<std::pair<MongeView, MongeView>>& triangles(int ddg, int hole) const {
    return triangles_[ddg][hole];
  }
  std::vector<Arc> union_arcs() const;

 private:
  std::vector<DenseDistanceGraph> ddgs_;
  int n_;
  std::vector<HeapSpec> heaps_;
  std::vector<char> boundary_;
  std::vector<std::vector<Slot>> as_row_, as_col_;
  std::vector<std::vector<std::pair<int, Weight>>> explicit_out_;
  std::vector<std::vector<HoleSlot>> holes_of_;
  std::vector<std::vector<std::optional<std::pair<MongeView, MongeView>>>> triangles_;
  int num_explicit_ = 0;
};

struct SsspCounters {
  long long heap_ops = 0;     // global or region heaps
  long long mh_ops = 0;       // Monge heap operations
  long long rmq_ops = 0;
  long long extractions = 0;  // vertices finalized
  long long h0_procs = 0;     // height-0 processes (main algorithm only)
  long long update_calls = 0;
};

struct SsspResult {
  std::vector<Weight> dist;  // per vertex id; kInf off the boundary or unreachable
  SsspCounters counters;
};

// Dijkstra over the DDGs with one FR Monge heap per piece and a lazy global
// heap of per-piece minima. Runs reuse the per-piece state of the previous
// run after a reset. Throws SourceNotBoundary.
class FrDijkstra {
 public:
  explicit FrDijkstra(const DdgIndex& index);
  SsspResult run(int s);

 private:
  const DdgIndex& index_;
  std::vector<FRMongeHeap> heaps_;
  std::vector<int> version_;
  std::vector<char> fin_;
};

// Single item per vertex keyed by the minimum over its copies; pieces keep
// unsplit parent intervals and share one deactivation-only RMQ per hole
// triangle. The RMQs are built once and copied back from the prototype at
// the start of every run.
class SingleCopyDijkstra {
 public:
  explicit SingleCopyDijkstra(const DdgIndex& index);
  SsspResult run(int s);

 private:
  const DdgIndex& index_;
  std::vector<int> hole_base_;
  // Per hole: [0] upper triangle, [1] lower triangle.
  std::vector<std::array<std::unique_ptr<DecrementalMongeRMQ>, 2>> proto_, rmq_;
  std::vector<ParentIntervals> pi_;
  std::vector<std::vector<int>> cand_;
  std::vector<std::vector<Slot>> watchers_;
  std::vector<char> fin_;
};

SsspResult fr_dijkstra(const DdgIndex& index, int s);
SsspResult fr_dijkstra_single_copy(const DdgIndex& index, int s);

// Plain Dijkstra on the explicit DDG arcs, restricted to the boundary.
SsspResult ddg_dijkstra(const DdgIndex& index, int s);

}  // namespace pgsp
