#include "pgsp/monge_heap.hpp"

#include <algorithm>
#include <string>

namespace pgsp {

// -------------------------------------------------------- ParentIntervals

int ParentIntervals::find_row(int v) const {
  auto it = std::partition_point(t_.begin(), t_.end(), [&](const Triplet& t) { return t.row > v; });
  if (it != t_.end() && it->row == v) return static_cast<int>(it - t_.begin());
  return -1;
}

std::pair<int, int> ParentIntervals::interval(int v) const {
  const int q = find_row(v);
  if (q < 0) return {0, -1};
  return {t_[q].start, t_[q].end};
}

int ParentIntervals::parent(int b) const {
  auto it = std::partition_point(t_.begin(), t_.end(), [&](const Triplet& t) { return t.start <= b; });
  if (it == t_.begin()) return -1;
  --it;
  return it->end >= b ? it->row : -1;
}

Weight ParentIntervals::implicit(int b) const {
  const int p = parent(b);
  return p < 0 ? kInf : sat_add(d_[p], (*m_)(p, b));
}

std::pair<int, int> ParentIntervals::relax(int v, Weight d, std::vector<int>* touched) {
  if (rel_[v] && d >= d_[v]) return interval(v);
  rel_[v] = 1;
  d_[v] = d;
  const int cols = m_->cols();
  if (d >= kInf || cols == 0) return {0, -1};
  if (t_.empty()) {
    t_.push_back({0, cols - 1, v});
    return {0, cols - 1};
  }
  int x, y;
  int p;
  const int own = find_row(v);
  if (own >= 0) {
    // A lower label keeps every column v already had.
    x = t_[own].start;
    y = t_[own].end;
    t_.erase(t_.begin() + own);
    p = own;
  } else {
    p = static_cast<int>(
        std::partition_point(t_.begin(), t_.end(), [&](const Triplet& t) { return t.row > v; }) - t_.begin());
    x = p < static_cast<int>(t_.size()) ? t_[p].start : cols;
    y = x - 1;
  }
  // Owners on the left have larger rows; v wins a suffix of each.
  while (p > 0) {
    Triplet& L = t_[p - 1];
    const int u = L.row;
    if (!beats(v, d, u, L.end)) break;
    if (touched) touched->push_back(u);
    if (beats(v, d, u, L.start)) {
      x = L.start;
      t_.erase(t_.begin() + (p - 1));
      --p;
      continue;
    }
    int lo = L.start + 1, hi = L.end;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (beats(v, d, u, mid)) hi = mid;
      else lo = mid + 1;
    }
    L.end = lo - 1;
    x = lo;
    break;
  }
  // Owners on the right have smaller rows; v wins a prefix of each.
  while (p < static_cast<int>(t_.size())) {
    Triplet& R = t_[p];
    const int u = R.row;
    if (!beats(v, d, u, R.start)) break;
    if (touched) touched->push_back(u);
    if (beats(v, d, u, R.end)) {
      y = R.end;
      t_.erase(t_.begin() + p);
      continue;
    }
    int lo = R.start, hi = R.end - 1;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (beats(v, d, u, mid)) lo = mid;
      else hi = mid - 1;
    }
    R.start = lo + 1;
    y = lo;
    break;
  }
  if (x <= y) t_.insert(t_.begin() + p, Triplet{x, y, v});
  return {x, y};
}

bool ParentIntervals::check() const {
  const int cols = m_->cols();
  int next = 0;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].start != next || t_[i].end < t_[i].start) return false;
    if (i > 0 && t_[i].row >= t_[i - 1].row) return false;
    next = t_[i].end + 1;
  }
  if (!t_.empty() && next != cols) return false;
  for (int b = 0; b < cols; ++b) {
    Weight best = kInf;
    for (int v = 0; v < m_->rows(); ++v)
      if (rel_[v]) best = std::min(best, sat_add(d_[v], (*m_)(v, b)));
    if (implicit(b) != best) return false;
  }
  return true;
}

// ------------------------------------------------------------ HKMongeHeap

HKMongeHeap::HKMongeHeap(const MongeView* m, Backend backend, const DynamicMongeRMQ* dyn,
                         std::shared_ptr<const NaiveMongeRMQ::Template> naive)
    : m_(m), backend_(backend), pi_(m), proto_(dyn), active_(m->cols(), 1), inactive_row_(m->cols(), -1) {
  if (backend == Backend::kCq3) {
    dyn_ = dyn ? std::make_unique<DynamicMongeRMQ>(*dyn) : std::make_unique<DynamicMongeRMQ>(*m);
  } else {
    naive_ = std::make_unique<NaiveMongeRMQ>(naive ? std::move(naive) : NaiveMongeRMQ::build_template(*m));
  }
}

void HKMongeHeap::reset() {
  pi_.reset();
  std::fill(active_.begin(), active_.end(), 1);
  std::fill(inactive_row_.begin(), inactive_row_.end(), -1);
  inactive_.clear();
  if (dyn_) {
    if (proto_) *dyn_ = *proto_;
    else *dyn_ = DynamicMongeRMQ(*m_);
  }
  if (naive_) naive_->reset();
  ctr_ = {};
}

void HKMongeHeap::relax(int v, Weight d, std::vector<int>* shrunk) {
  ++ctr_.relaxes;
  if (pi_.relaxed(v) && d >= pi_.label(v)) return;
  touched_.clear();
  const auto [x, y] = pi_.relax(v, d, &touched_);
  if (shrunk)
    for (int u : touched_) {
      const auto [ux, uy] = pi_.interval(u);
      if (ux <= uy) shrunk->push_back(u);
    }
  if (x > y) return;
  // Every column in v's interval just got a smaller label.
  for (auto it = inactive_.lower_bound(x); it != inactive_.end() && *it <= y;) {
    const int b = *it;
    ++ctr_.rmq_ops;
    if (backend_ == Backend::kCq3) dyn_->activate_col(b);
    else naive_->activate_entry(inactive_row_[b], b);
    active_[b] = 1;
    inactive_row_[b] = -1;
    it = inactive_.erase(it);
  }
}

Child HKMongeHeap::get_min_child(int v) {
  ++ctr_.min_child;
  if (!pi_.relaxed(v)) throw NotRelaxed("row " + std::to_string(v));
  return min_child_of(v);
}

Child HKMongeHeap::min_child_of(int v) {
  const auto [x, y] = pi_.interval(v);
  if (x > y) return {};
  ++ctr_.rmq_ops;
  const RmqAnswer a = backend_ == Backend::kCq3 ? dyn_->query(v, x, y) : naive_->query(v, x, y);
  if (a.col < 0) return {};
  return {a.col, sat_add(pi_.label(v), (*m_)(v, a.col))};
}

Child HKMongeHeap::extract(int b) {
  ++ctr_.extracts;
  if (b < 0 || b >= cols() || !active_[b]) throw AlreadyInactive("column " + std::to_string(b));
  const int p = pi_.parent(b);
  ++ctr_.rmq_ops;
  if (backend_ == Backend::kCq3) {
    dyn_->deactivate_col(b);
  } else {
    // Only the parent's row ever looks at this column while it is inactive.
    naive_->deactivate_entry(p < 0 ? 0 : p, b);
    inactive_row_[b] = p < 0 ? 0 : p;
  }
  active_[b] = 0;
  inactive_.insert(b);
  if (p < 0) return {};
  return min_child_of(p);
}

// ------------------------------------------------------------ FRMongeHeap

RmqAnswer template_query(const NaiveMongeRMQ::Template& t, int i, int a, int b) {
  if (a > b) return {};
  const auto& tr = t.tree[i];
  std::pair<Weight, int> best{kInf, -1};
  for (int l = a + t.size, r = b + t.size + 1; l < r; l /= 2, r /= 2) {
    if (l & 1) best = std::min(best, tr[l++]);
    if (r & 1) best = std::min(best, tr[--r]);
  }
  if (best.second < 0) return {};
  return {best.first, best.second};
}

FRMongeHeap::FRMongeHeap(const MongeView* m, std::shared_ptr<const NaiveMongeRMQ::Template> rows)
    : m_(m), rmq_(rows ? std::move(rows) : NaiveMongeRMQ::build_template(*m)), d_(m->rows(), kInf),
      activated_(m->rows(), 0), extracted_(m->cols(), 0) {}

void FRMongeHeap::reset() {
  std::fill(d_.begin(), d_.end(), kInf);
  std::fill(activated_.begin(), activated_.end(), 0);
  std::fill(extracted_.begin(), extracted_.end(), 0);
  t_.clear();
  qb_.clear();
  covered_ = false;
  ctr_ = {};
}

void FRMongeHeap::drop(const FRTriplet& t) {
  if (t.cand >= 0) qb_.erase({t.cand_label, t.cand});
}

void FRMongeHeap::refresh(FRTriplet& t) {
  drop(t);
  ++ctr_.rmq_ops;
  const RmqAnswer a = template_query(*rmq_, t.row, t.start, t.end);
  t.cand = a.col;
  t.cand_label = a.col < 0 ? kInf : sat_add(d_[t.row], a.value);
  if (t.cand >= 0) qb_.insert({t.cand_label, t.cand});
}

void FRMongeHeap::activate(int a, Weight d) {
  ++ctr_.activations;
  if (activated_[a]) throw DoubleActivate("row " + std::to_string(a));
  activated_[a] = 1;
  d_[a] = d;
  const int cols = m_->cols();
  if (d >= kInf || cols == 0) return;
  if (!covered_) {
    covered_ = true;
    t_.push_back({0, cols - 1, a, -1, kInf});
    refresh(t_.back());
    return;
  }
  // Parents follow the envelope over all columns, extracted ones included,
  // so a may end up owning several triplets separated by extracted columns.
  int p = static_cast<int>(
      std::partition_point(t_.begin(), t_.end(), [&](const FRTriplet& t) { return t.row > a; }) - t_.begin());
  for (int q = p - 1; q >= 0; --q) {
    FRTriplet& L = t_[q];
    if (!beats(a, d, L.row, L.end)) break;
    if (beats(a, d, L.row, L.start)) {
      L.row = a;
      refresh(L);
      continue;
    }
    int lo = L.start + 1, hi = L.end;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (beats(a, d, L.row, mid)) hi = mid;
      else lo = mid + 1;
    }
    const FRTriplet mine{lo, L.end, a, -1, kInf};
    L.end = lo - 1;
    refresh(L);
    t_.insert(t_.begin() + q + 1, mine);
    refresh(t_[q + 1]);
    ++p;
    break;
  }
  for (int q = p; q < static_cast<int>(t_.size()); ++q) {
    FRTriplet& R = t_[q];
    if (!beats(a, d, R.row, R.start)) break;
    if (beats(a, d, R.row, R.end)) {
      R.row = a;
      refresh(R);
      continue;
    }
    int lo = R.start, hi = R.end - 1;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (beats(a, d, R.row, mid)) lo = mid;
      else hi = mid - 1;
    }
    const FRTriplet mine{R.start, lo, a, -1, kInf};
    R.start = lo + 1;
    refresh(R);
    t_.insert(t_.begin() + q, mine);
    refresh(t_[q]);
    break;
  }
}

Child FRMongeHeap::find_min() const {
  if (qb_.empty()) return {};
  return {qb_.begin()->second, qb_.begin()->first};
}

Child FRMongeHeap::extract_min() {
  ++ctr_.extracts;
  if (qb_.empty()) return {};
  const auto [label, b] = *qb_.begin();
  auto it = std::partition_point(t_.begin(), t_.end(), [&](const FRTriplet& t) { return t.start <= b; });
  const int q = static_cast<int>(it - t_.begin()) - 1;
  FRTriplet whole = t_[q];
  drop(whole);
  extracted_[b] = 1;
  t_.erase(t_.begin() + q);
  int at = q;
  if (whole.start <= b - 1) {
    t_.insert(t_.begin() + at, FRTriplet{whole.start, b - 1, whole.row, -1, kInf});
    refresh(t_[at]);
    ++at;
  }
  if (b + 1 <= whole.end) {
    t_.insert(t_.begin() + at, FRTriplet{b + 1, whole.end, whole.row, -1, kInf});
    refresh(t_[at]);
  }
  return {b, label};
}

Weight FRMongeHeap::label_of(int b) const {
  if (extracted_[b]) return kInf;
  auto it = std::partition_point(t_.begin(), t_.end(), [&](const FRTriplet& t) { return t.start <= b; });
  if (it == t_.begin()) return kInf;
  --it;
  if (it->end < b) return kInf;
  return sat_add(d_[it->row], (*m_)(it->row, b));
}

bool FRMongeHeap::check() const {
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].start > t_[i].end) return false;
    if (i > 0 && (t_[i].start <= t_[i - 1].end || t_[i].row > t_[i - 1].row)) return false;
    for (int b = t_[i].start; b <= t_[i].end; ++b)
      if (extracted_[b]) return false;
  }
  if (qb_.size() != t_.size()) return false;
  for (const auto& t : t_)
    if (!qb_.count({t.cand_label, t.cand})) return false;
  return true;
}

}  // namespace pgsp
