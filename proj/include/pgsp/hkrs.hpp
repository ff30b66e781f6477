#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pgsp/division.hpp"
#include "pgsp/fr_dijkstra.hpp"
#include "pgsp/monge_heap.hpp"
#include "pgsp/pairing_heap.hpp"
#include "pgsp/planar_graph.hpp"

namespace pgsp {

struct HkrsOptions {
  int r = 16;
  // Division settings; mandatory vertices use ids of the input graph.
  DivisionOptions division;
};

struct HkrsRunOptions {
  Backend backend = Backend::kCq3;
  // Reference mode: every hyperarc is relaxed explicitly, nothing is extracted.
  bool algorithm_h = false;
  // One line per height-0 process.
  bool trace = false;
  // Checks the latent/accurate/active invariants on the touched heap after
  // every height-0 process.
  bool check_invariants = false;
};

// One height-0 process. kHyper: (tail, heap); kCopy: (vertex, heap);
// kArc: (tail, head). `label` is the value the item carried.
struct TraceEvent {
  enum Kind : char { kHyper, kCopy, kArc } kind;
  int a, b;
  Weight label;
  bool operator==(const TraceEvent&) const = default;
};
// "P hyper v/heap d", "P copy w/heap d" or "P arc u>w d".
std::string to_string(const TraceEvent& e);

struct HkrsResult : SsspResult {
  std::vector<TraceEvent> trace;
  long long invariant_checks = 0;
  long long invariant_violations = 0;
  long long max_update_chain = 0;  // longest Update chain, in calls
};

// Region-heap shortest paths over the DDGs of a recursive division. Height-0
// items are copy arcs w_h -> w, hyperarcs (one per piece row) and explicit
// DDG arcs; every height-i region keeps a heap of its children keyed by
// their minimum.
//
// Vertices of degree > 3 are split first (reduce_degree); input vertex ids
// are kept, so labels of input vertices read directly from the result. A
// designated face is mapped onto the split graph.
class HkrsEngine {
 public:
  explicit HkrsEngine(const EmbeddedPlanarGraph& g, const HkrsOptions& opts = {});
  // Prebuilt division over vertex ids [0, num_vertices) with one DDG per
  // height-1 region, in div.at_height[1] order. graph() is empty.
  HkrsEngine(int num_vertices, RecursiveDivision div, std::vector<DenseDistanceGraph> ddgs);
  HkrsEngine(const HkrsEngine&) = delete;
  HkrsEngine& operator=(const HkrsEngine&) = delete;

  const EmbeddedPlanarGraph& graph() const { return g_; }
  int num_vertices() const { return n_; }
  int input_vertices() const { return n_input_; }
  // origin()[v]: input vertex that v was split from (identity when unsplit).
  const std::vector<int>& origin() const { return origin_; }
  const RecursiveDivision& division() const { return div_; }
  const DdgIndex& index() const { return *index_; }
  std::vector<int> boundary_vertices() const { return index_->boundary_vertices(); }
  // Attention span per height ([0] is the height-0 value).
  const std::vector<int>& alpha() const { return alpha_; }
  long long num_h0_regions() const { return static_cast<long long>(kind_.size()); }
  long long num_copies() const { return num_copies_; }
  long long num_hyperarcs() const { return num_hyper_; }

  // Labels of all DDG vertices from boundary vertex s (kInf elsewhere).
  // Throws SourceNotBoundary.
  HkrsResult sssp(int s, const HkrsRunOptions& ro = {});

 private:
  enum Kind : char { kCopy, kHyper, kArc };

  void init();
  void process(int region);
  void process_item(int item);
  void update_item(int item, Weight k);
  void update_region(int region, int local, Weight k);
  void fan_out(int v);
  void set_copy(int heap, int col, Weight label);
  void check_invariants(int heap);
  std::vector<HKMongeHeap>& heaps();

  EmbeddedPlanarGraph g_;
  int n_input_ = 0;
  int n_ = 0;
  std::vector<int> origin_;
  RecursiveDivision div_;
  std::unique_ptr<DdgIndex> index_;
  std::vector<int> alpha_;

  // Region tree over heights >= 1.
  std::vector<int> parent_, slot_;           // per region id
  std::vector<std::vector<int>> children_;   // per region id, sorted
  std::vector<int> item_base_;               // per region id (height 1 only)
  std::vector<PairingHeap> q_;               // per region id

  // Height-0 items.
  std::vector<Kind> kind_;
  std::vector<int> a_, b_, region_;  // copy: (heap, col); hyper: (heap, row); arc: (tail, head)
  std::vector<Weight> len_;          // explicit arcs
  std::vector<int> copy_base_, hyper_base_;
  std::vector<std::vector<int>> fanout_;  // per vertex: hyperarcs and arcs with that tail
  long long num_copies_ = 0, num_hyper_ = 0;

  // Per-run state.
  HkrsRunOptions ro_;
  HkrsResult* res_ = nullptr;
  std::vector<Weight> d_, dcopy_;
  std::vector<HKMongeHeap> heaps_cq1_, heaps_cq3_;
  long long chain_ = 0;
  std::vector<int> shrunk_;
};

}  // namespace pgsp
