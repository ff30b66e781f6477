#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "pgsp/monge_rmq.hpp"

namespace pgsp {

// Interval [start, end] of B positions whose current parent is `row`.
struct Triplet {
  int start = 0;
  int end = -1;
  int row = -1;
};

struct Child {
  int col = -1;
  Weight label = kInf;
};

struct HeapCounters {
  long long relaxes = 0;
  long long min_child = 0;
  long long extracts = 0;
  long long activations = 0;
  long long rmq_ops = 0;
  long long total() const { return relaxes + min_child + extracts + activations; }
};

// Parent assignment of a Monge piece when every row owns at most one
// interval. Triplets are kept sorted by start; owner rows strictly decrease
// along the columns (later rows win earlier columns). A row beats an owner
// only with a strictly smaller label, so ties keep the existing parent.
class ParentIntervals {
 public:
  ParentIntervals() = default;
  explicit ParentIntervals(const MongeView* m) : m_(m), d_(m->rows(), kInf), rel_(m->rows(), 0) {}
  // Back to the state after construction, keeping storage.
  void reset() {
    std::fill(d_.begin(), d_.end(), kInf);
    std::fill(rel_.begin(), rel_.end(), 0);
    t_.clear();
  }

  // Implicitly relaxes all arcs of row v with label d. Returns the interval v
  // owns afterwards (first > second if none). A repeated call with an
  // unchanged label changes nothing. Rows that lost columns go to `touched`.
  std::pair<int, int> relax(int v, Weight d, std::vector<int>* touched = nullptr);

  bool relaxed(int v) const { return rel_[v] != 0; }
  Weight label(int v) const { return d_[v]; }
  std::pair<int, int> interval(int v) const;
  int parent(int b) const;
  // d(parent) + M(parent, b), kInf without a parent.
  Weight implicit(int b) const;
  const std::vector<Triplet>& triplets() const { return t_; }
  const MongeView& matrix() const { return *m_; }

  // Partition, ordering and dominance against a brute-force scan.
  bool check() const;

 private:
  bool beats(int v, Weight d, int u, int b) const {
    return sat_add(d, (*m_)(v, b)) < sat_add(d_[u], (*m_)(u, b));
  }
  int find_row(int v) const;

  const MongeView* m_ = nullptr;
  std::vector<Weight> d_;
  std::vector<char> rel_;
  std::vector<Triplet> t_;
};

enum class Backend { kCq1, kCq3 };

// Monge heap of the main algorithm: repeated relaxes, minimal active child
// per parent, extraction that deactivates a copy. cq3 keeps one dynamic
// column RMQ, cq1 a per-row RMQ with per-entry activity.
class HKMongeHeap {
 public:
  // cq3 copies `dyn`; cq1 shares `naive`. Only the one matching `backend`
  // is used.
  HKMongeHeap(const MongeView* m, Backend backend, const DynamicMongeRMQ* dyn,
              std::shared_ptr<const NaiveMongeRMQ::Template> naive);

  int rows() const { return m_->rows(); }
  int cols() const { return m_->cols(); }
  Backend backend() const { return backend_; }
  // Fresh state for a new run, reusing storage.
  void reset();

  // Rows that lost part of their interval to v but kept some columns go to
  // `shrunk`; their minimal active child may have moved to v.
  void relax(int v, Weight d, std::vector<int>* shrunk = nullptr);
  Child get_min_child(int v);
  Child extract(int b);

  bool active(int b) const { return active_[b] != 0; }
  bool relaxed(int v) const { return pi_.relaxed(v); }
  int parent(int b) const { return pi_.parent(b); }
  Weight implicit_label(int b) const { return pi_.implicit(b); }
  const ParentIntervals& intervals() const { return pi_; }
  const HeapCounters& counters() const { return ctr_; }

 private:
  Child min_child_of(int v);

  const MongeView* m_;
  Backend backend_;
  ParentIntervals pi_;
  const DynamicMongeRMQ* proto_;
  std::unique_ptr<DynamicMongeRMQ> dyn_;
  std::unique_ptr<NaiveMongeRMQ> naive_;
  std::vector<char> active_;
  std::vector<int> inactive_row_;  // cq1: row whose entry was switched off
  std::set<int> inactive_;
  std::vector<int> touched_;
  HeapCounters ctr_;
};

// Monge heap of plain FR-Dijkstra: each row is activated once, extracted
// columns leave the triplets for good, and Q_B keeps one candidate per
// triplet. A row may own several triplets split by extracted columns. Range minima come from static per-row trees.
class FRMongeHeap {
 public:
  FRMongeHeap(const MongeView* m, std::shared_ptr<const NaiveMongeRMQ::Template> rows);
  void reset();

  int rows() const { return m_->rows(); }
  int cols() const { return m_->cols(); }

  void activate(int a, Weight d);
  Child find_min() const;
  Child extract_min();

  bool extracted(int b) const { return extracted_[b] != 0; }
  // Current label of a non-extracted column, kInf if it has no parent.
  Weight label_of(int b) const;
  const HeapCounters& counters() const { return ctr_; }
  bool check() const;

 private:
  struct FRTriplet {
    int start, end, row;
    int cand;
    Weight cand_label;
  };
  void refresh(FRTriplet& t);
  void drop(const FRTriplet& t);
  bool beats(int v, Weight d, int u, int b) const {
    return sat_add(d, (*m_)(v, b)) < sat_add(d_[u], (*m_)(u, b));
  }

  const MongeView* m_;
  std::shared_ptr<const NaiveMongeRMQ::Template> rmq_;
  std::vector<Weight> d_;
  std::vector<char> activated_, extracted_;
  std::vector<FRTriplet> t_;
  std::set<std::pair<Weight, int>> qb_;
  bool covered_ = false;
  HeapCounters ctr_;
};

// Read-only range minimum on an all-active template.
RmqAnswer template_query(const NaiveMongeRMQ::Template& t, int i, int a, int b);

}  // namespace pgsp
