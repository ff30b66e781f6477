#include "pgsp/monge_rmq.hpp"

#include <algorithm>
#include <string>

namespace pgsp {

namespace {

void check_col(int j, int cols) {
  if (j < 0 || j >= cols) throw ColumnOutOfRange("column " + std::to_string(j));
}

void check_query(int i, int a, int b, int rows, int cols) {
  if (i < 0 || i >= rows) throw ColumnOutOfRange("row " + std::to_string(i));
  if (a < 0 || b >= cols) throw ColumnOutOfRange("range [" + std::to_string(a) + "," + std::to_string(b) + "]");
}

}  // namespace

// ---------------------------------------------------------------- dynamic

DynamicMongeRMQ::DynamicMongeRMQ(MongeView m) : m_(std::move(m)) {
  if (!m_.completed()) m_ = complete_partial(m_);
  leaf_.assign(m_.cols(), -1);
  if (m_.cols() > 0) build(0, m_.cols() - 1, -1);
}

int DynamicMongeRMQ::build(int lo, int hi, int parent) {
  const int node = static_cast<int>(t_.size());
  t_.push_back(0);
  cnt_.push_back(hi - lo + 1);
  lo_.push_back(lo);
  hi_.push_back(hi);
  left_.push_back(-1);
  right_.push_back(-1);
  parent_.push_back(parent);
  if (lo == hi) {
    leaf_[lo] = node;
    return node;
  }
  const int mid = (lo + hi) / 2;
  const int l = build(lo, mid, node);
  const int r = build(mid + 1, hi, node);
  left_[node] = l;
  right_[node] = r;
  t_[node] = transition(node, 0, m_.rows());
  return node;
}

bool DynamicMongeRMQ::better(int i, int c, int d) const {
  if (c < 0) return false;
  if (d < 0) return true;
  const Weight x = m_(i, c), y = m_(i, d);
  return x < y || (x == y && c < d);
}

int DynamicMongeRMQ::eval(int node, int i) const {
  if (cnt_[node] == 0) return -1;
  while (left_[node] >= 0) {
    const int l = left_[node], r = right_[node];
    if (cnt_[l] == 0) node = r;
    else if (cnt_[r] == 0) node = l;
    else node = i >= t_[node] ? l : r;
  }
  return lo_[node];
}

// Smallest row in [from, to) where the left child wins, `to` if none.
int DynamicMongeRMQ::transition(int node, int from, int to) const {
  const int l = left_[node], r = right_[node];
  while (from < to) {
    const int mid = from + (to - from) / 2;
    if (better(mid, eval(l, mid), eval(r, mid)) || eval(r, mid) < 0) to = mid;
    else from = mid + 1;
  }
  return from;
}

void DynamicMongeRMQ::set_col(int j, bool on) {
  check_col(j, m_.cols());
  int node = leaf_[j];
  if ((cnt_[node] > 0) == on) return;
  cnt_[node] = on ? 1 : 0;
  for (node = parent_[node]; node >= 0; node = parent_[node]) {
    cnt_[node] += on ? 1 : -1;
    if (cnt_[left_[node]] > 0 && cnt_[right_[node]] > 0) t_[node] = transition(node, 0, m_.rows());
  }
}

void DynamicMongeRMQ::deactivate_col(int j) {
  ++ctr_.deactivations;
  set_col(j, false);
}

void DynamicMongeRMQ::activate_col(int j) {
  ++ctr_.activations;
  set_col(j, true);
}

void DynamicMongeRMQ::collect(int node, int lo, int hi, int a, int b, int i, RmqAnswer& best) const {
  if (hi < a || lo > b || cnt_[node] == 0) return;
  if (a <= lo && hi <= b) {
    const int c = eval(node, i);
    if (better(i, c, best.col)) best = {m_(i, c), c};
    return;
  }
  const int mid = (lo + hi) / 2;
  collect(left_[node], lo, mid, a, b, i, best);
  collect(right_[node], mid + 1, hi, a, b, i, best);
}

RmqAnswer DynamicMongeRMQ::query(int i, int a, int b) {
  ++ctr_.queries;
  RmqAnswer best;
  if (a > b || m_.cols() == 0) return best;
  check_query(i, a, b, m_.rows(), m_.cols());
  collect(0, 0, m_.cols() - 1, a, b, i, best);
  return best;
}

bool DynamicMongeRMQ::check_envelopes() const {
  for (int node = 0; node < static_cast<int>(t_.size()); ++node) {
    if (left_[node] < 0) continue;
    for (int i = 0; i < m_.rows(); ++i) {
      int brute = -1;
      for (int c = lo_[node]; c <= hi_[node]; ++c)
        if (cnt_[leaf_[c]] > 0 && better(i, c, brute)) brute = c;
      if (eval(node, i) != brute) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- decremental

DecrementalMongeRMQ::DecrementalMongeRMQ(MongeView m) : m_(std::move(m)) {
  if (!m_.completed()) m_ = complete_partial(m_);
  leaf_.assign(m_.cols(), -1);
  active_.assign(m_.cols(), true);
  if (m_.cols() > 0) build(0, m_.cols() - 1, -1);
}

bool DecrementalMongeRMQ::better(int i, int c, int d) const {
  if (c < 0) return false;
  if (d < 0) return true;
  const Weight x = m_(i, c), y = m_(i, d);
  return x < y || (x == y && c < d);
}

namespace {
using EnvEntry = std::pair<int, int>;
// First entry starting after row i.
std::vector<EnvEntry>::const_iterator after_row(const std::vector<EnvEntry>& e, int i) {
  return std::upper_bound(e.begin(), e.end(), i, [](int x, const EnvEntry& y) { return x < y.first; });
}
}  // namespace

int DecrementalMongeRMQ::eval(int node, int i) const {
  return std::prev(after_row(env_[node], i))->second;
}

int DecrementalMongeRMQ::transition(int node, int from, int to) const {
  const int l = left_[node], r = right_[node];
  if (cnt_[r] == 0) return 0;
  if (cnt_[l] == 0) return m_.rows();
  while (from < to) {
    const int mid = from + (to - from) / 2;
    if (better(mid, eval(l, mid), eval(r, mid))) to = mid;
    else from = mid + 1;
  }
  return from;
}

// Overwrites rows [from, to) of dst with the envelope src.
void DecrementalMongeRMQ::copy_rows(Env& dst, const Env& src, int from, int to) {
  if (from >= to) return;
  const int rows = m_.rows();
  Env& out = scratch_;
  out.clear();
  auto push = [&](int start, int col) {
    if (!out.empty() && out.back().second == col) return;
    out.emplace_back(start, col);
  };
  auto d = dst.cbegin();
  for (; d != dst.cend() && d->first < from; ++d) push(d->first, d->second);
  auto it = std::prev(after_row(src, from));
  push(from, it->second);
  ++ctr_.breakpoint_inserts;
  for (++it; it != src.end() && it->first < to; ++it) {
    push(it->first, it->second);
    ++ctr_.breakpoint_inserts;
  }
  if (to < rows) {
    push(to, std::prev(after_row(dst, to))->second);
    for (d = after_row(dst, to); d != dst.cend(); ++d) push(d->first, d->second);
  }
  dst.assign(out.begin(), out.end());
}

int DecrementalMongeRMQ::build(int lo, int hi, int parent) {
  const int node = static_cast<int>(t_.size());
  t_.push_back(0);
  cnt_.push_back(hi - lo + 1);
  lo_.push_back(lo);
  hi_.push_back(hi);
  left_.push_back(-1);
  right_.push_back(-1);
  parent_.push_back(parent);
  env_.emplace_back();
  if (lo == hi) {
    leaf_[lo] = node;
    env_[node].assign(1, {0, lo});
    return node;
  }
  const int mid = (lo + hi) / 2;
  const int l = build(lo, mid, node);
  const int r = build(mid + 1, hi, node);
  left_[node] = l;
  right_[node] = r;
  const int t = transition(node, 0, m_.rows());
  t_[node] = t;
  Env& e = env_[node];
  e.assign(1, {0, -1});
  copy_rows(e, env_[r], 0, t);
  copy_rows(e, env_[l], t, m_.rows());
  return node;
}

void DecrementalMongeRMQ::deactivate_col(int j) {
  check_col(j, m_.cols());
  ++ctr_.deactivations;
  if (!active_[j]) return;
  active_[j] = false;
  const int rows = m_.rows();
  int child = leaf_[j];
  cnt_[child] = 0;
  env_[child].assign(1, {0, -1});
  // Rows of the child's old envelope that belonged to column j.
  int cs = 0, ce = rows;
  for (int node = parent_[child]; node >= 0; child = node, node = parent_[node]) {
    --cnt_[node];
    const bool from_left = left_[node] == child;
    const int t_old = t_[node];
    // j's rows inside this node before the change.
    if (from_left) cs = std::max(cs, t_old);
    else ce = std::min(ce, t_old);
    if (cs >= ce) {
      // j did not show in this envelope; only counts change further up.
      for (int up = parent_[node]; up >= 0; up = parent_[up]) --cnt_[up];
      return;
    }
    Env& e = env_[node];
    if (cnt_[node] == 0) {
      e.assign(1, {0, -1});
      continue;
    }
    const int l = left_[node], r = right_[node];
    if (from_left) {
      const int t_new = transition(node, t_old, rows);
      t_[node] = t_new;
      copy_rows(e, env_[r], t_old, t_new);
      copy_rows(e, env_[l], std::max(cs, t_new), ce);
    } else {
      const int t_new = transition(node, 0, t_old);
      t_[node] = t_new;
      copy_rows(e, env_[l], t_new, t_old);
      copy_rows(e, env_[r], cs, std::min(ce, t_new));
    }
  }
}

void DecrementalMongeRMQ::activate_col(int j) {
  throw ReactivationAttempt("column " + std::to_string(j) + " cannot be reactivated");
}

void DecrementalMongeRMQ::collect(int node, int lo, int hi, int a, int b, int i, RmqAnswer& best) const {
  if (hi < a || lo > b || cnt_[node] == 0) return;
  if (a <= lo && hi <= b) {
    const int c = eval(node, i);
    if (better(i, c, best.col)) best = {m_(i, c), c};
    return;
  }
  const int mid = (lo + hi) / 2;
  collect(left_[node], lo, mid, a, b, i, best);
  collect(right_[node], mid + 1, hi, a, b, i, best);
}

RmqAnswer DecrementalMongeRMQ::query(int i, int a, int b) {
  ++ctr_.queries;
  RmqAnswer best;
  if (a > b || m_.cols() == 0) return best;
  check_query(i, a, b, m_.rows(), m_.cols());
  collect(0, 0, m_.cols() - 1, a, b, i, best);
  return best;
}

bool DecrementalMongeRMQ::check_envelopes() const {
  for (int node = 0; node < static_cast<int>(t_.size()); ++node) {
    int prev_col = -2;
    for (const auto& [start, col] : env_[node]) {
      if (col == prev_col) return false;
      if (prev_col >= 0 && col > prev_col) return false;  // columns must fall as rows grow
      prev_col = col;
    }
    for (int i = 0; i < m_.rows(); ++i) {
      int brute = -1;
      for (int c = lo_[node]; c <= hi_[node]; ++c)
        if (active_[c] && better(i, c, brute)) brute = c;
      if (eval(node, i) != brute) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------------- naive

namespace {
constexpr std::pair<Weight, int> kOff{kInf, -1};
}

std::shared_ptr<const NaiveMongeRMQ::Template> NaiveMongeRMQ::build_template(const MongeView& m) {
  auto t = std::make_shared<Template>();
  t->rows = m.rows();
  t->cols = m.cols();
  while (t->size < t->cols) t->size *= 2;
  t->tree.assign(t->rows, std::vector<std::pair<Weight, int>>(2 * t->size, kOff));
  for (int i = 0; i < t->rows; ++i) {
    auto& tr = t->tree[i];
    for (int j = 0; j < t->cols; ++j) tr[t->size + j] = {m(i, j), j};
    for (int x = t->size - 1; x >= 1; --x) tr[x] = std::min(tr[2 * x], tr[2 * x + 1]);
  }
  return t;
}

NaiveMongeRMQ::NaiveMongeRMQ(std::shared_ptr<const Template> t) : t_(std::move(t)), own_(t_->rows) {}

void NaiveMongeRMQ::reset() {
  for (int i = 0; i < t_->rows; ++i)
    if (own_[i]) *own_[i] = t_->tree[i];
  ctr_ = {};
}

bool NaiveMongeRMQ::active(int i, int j) const { return row(i)[t_->size + j].second >= 0; }

void NaiveMongeRMQ::set_entry(int i, int j, bool on) {
  if (i < 0 || i >= t_->rows) throw ColumnOutOfRange("row " + std::to_string(i));
  check_col(j, t_->cols);
  if (active(i, j) == on) return;
  if (!own_[i]) own_[i] = std::make_unique<std::vector<std::pair<Weight, int>>>(t_->tree[i]);
  auto& tr = *own_[i];
  int x = t_->size + j;
  tr[x] = on ? t_->tree[i][x] : kOff;
  for (x /= 2; x >= 1; x /= 2) tr[x] = std::min(tr[2 * x], tr[2 * x + 1]);
}

void NaiveMongeRMQ::deactivate_entry(int i, int j) {
  ++ctr_.deactivations;
  set_entry(i, j, false);
}

void NaiveMongeRMQ::activate_entry(int i, int j) {
  ++ctr_.activations;
  set_entry(i, j, true);
}

RmqAnswer NaiveMongeRMQ::query(int i, int a, int b) {
  ++ctr_.queries;
  if (a > b || t_->cols == 0) return {};
  check_query(i, a, b, t_->rows, t_->cols);
  const auto& tr = row(i);
  std::pair<Weight, int> best = kOff;
  for (int l = a + t_->size, r = b + t_->size + 1; l < r; l /= 2, r /= 2) {
    if (l & 1) best = std::min(best, tr[l++]);
    if (r & 1) best = std::min(best, tr[--r]);
  }
  if (best.second < 0) return {};
  return {best.first, best.second};
}

}  // namespace pgsp
