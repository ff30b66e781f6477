#pragma once

#include <memory>
#include <vector>

#include "pgsp/monge.hpp"

namespace pgsp {

// Minimum of one row over a column range; ties go to the lowest column.
// col = -1 and value = kInf when no active entry exists.
struct RmqAnswer {
  Weight value = kInf;
  int col = -1;
};

struct RmqCounters {
  long long queries = 0;
  long long activations = 0;
  long long deactivations = 0;
  long long breakpoint_inserts = 0;
};

// Column-deactivation RMQ over a complete Monge view. A tree over columns
// keeps one transition row per node: the left child's minimum wins for rows
// >= t, the right child's below t.
class DynamicMongeRMQ {
 public:
  explicit DynamicMongeRMQ(MongeView m);

  int rows() const { return m_.rows(); }
  int cols() const { return m_.cols(); }
  void deactivate_col(int j);
  void activate_col(int j);
  bool active(int j) const { return cnt_[leaf_[j]] > 0; }
  RmqAnswer query(int i, int a, int b);
  const RmqCounters& counters() const { return ctr_; }

  // Checks that every node's transition row still splits its rows correctly.
  bool check_envelopes() const;

 private:
  int build(int lo, int hi, int parent);
  int eval(int node, int i) const;
  int transition(int node, int from, int to) const;
  void set_col(int j, bool on);
  void collect(int node, int lo, int hi, int a, int b, int i, RmqAnswer& best) const;
  bool better(int i, int c, int d) const;

  MongeView m_;
  // Per node: transition row, active column count, column range, links.
  std::vector<int> t_, cnt_, lo_, hi_, left_, right_, parent_;
  std::vector<int> leaf_;  // per column
  RmqCounters ctr_;
};

// Deactivation-only variant. Every node keeps its whole lower envelope as a
// sorted (row-start, column) list, so evaluation is one predecessor lookup.
// Copy-assigning from a prototype reuses storage, which makes per-run
// snapshots cheap.
class DecrementalMongeRMQ {
 public:
  explicit DecrementalMongeRMQ(MongeView m);

  int rows() const { return m_.rows(); }
  int cols() const { return m_.cols(); }
  void deactivate_col(int j);
  [[noreturn]] void activate_col(int j);
  bool active(int j) const { return active_[j]; }
  RmqAnswer query(int i, int a, int b);
  const RmqCounters& counters() const { return ctr_; }

  bool check_envelopes() const;

 private:
  using Env = std::vector<std::pair<int, int>>;  // (start row, column), -1 means empty
  int build(int lo, int hi, int parent);
  int eval(int node, int i) const;
  int transition(int node, int from, int to) const;
  void copy_rows(Env& dst, const Env& src, int from, int to);
  void collect(int node, int lo, int hi, int a, int b, int i, RmqAnswer& best) const;
  bool better(int i, int c, int d) const;

  MongeView m_;
  std::vector<Env> env_;
  std::vector<int> t_, cnt_, lo_, hi_, left_, right_, parent_;
  std::vector<int> leaf_;
  std::vector<bool> active_;
  Env scratch_;
  RmqCounters ctr_;
};

// Per-row segment trees with per-entry activity. The all-active trees are
// built once and shared; a run copies a row the first time it changes it.
class NaiveMongeRMQ {
 public:
  struct Template {
    int rows = 0;
    int cols = 0;
    int size = 1;  // leaves per row tree, power of two
    std::vector<std::vector<std::pair<Weight, int>>> tree;
  };

  static std::shared_ptr<const Template> build_template(const MongeView& m);

  explicit NaiveMongeRMQ(std::shared_ptr<const Template> t);
  explicit NaiveMongeRMQ(const MongeView& m) : NaiveMongeRMQ(build_template(m)) {}

  int rows() const { return t_->rows; }
  int cols() const { return t_->cols; }
  // All entries active again; copied rows keep their storage.
  void reset();
  void deactivate_entry(int i, int j);
  void activate_entry(int i, int j);
  bool active(int i, int j) const;
  RmqAnswer query(int i, int a, int b);
  const RmqCounters& counters() const { return ctr_; }

 private:
  void set_entry(int i, int j, bool on);
  const std::vector<std::pair<Weight, int>>& row(int i) const { return own_[i] ? *own_[i] : t_->tree[i]; }

  std::shared_ptr<const Template> t_;
  std::vector<std::unique_ptr<std::vector<std::pair<Weight, int>>>> own_;
  RmqCounters ctr_;
};

}  // namespace pgsp
