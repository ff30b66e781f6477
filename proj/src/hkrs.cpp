#include "pgsp/hkrs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pgsp {

std::string to_string(const TraceEvent& e) {
  static const char* const names[] = {"P hyper ", "P copy ", "P arc "};
  const char sep = e.kind == TraceEvent::kArc ? '>' : '/';
  return names[e.kind] + std::to_string(e.a) + sep + std::to_string(e.b) + ' ' + std::to_string(e.label);
}

HkrsEngine::HkrsEngine(const EmbeddedPlanarGraph& g, const HkrsOptions& opts) : n_input_(g.num_vertices()) {
  DivisionOptions dopt = opts.division;
  if (g.max_degree() > 3) {
    DegreeReduction red = reduce_degree(g);
    g_ = std::move(red.graph);
    origin_ = std::move(red.origin);
    // Original darts keep their ids, so a face is found again through one of them.
    if (dopt.designated_face >= 0) {
      if (dopt.designated_face >= g.num_faces()) throw FaceNotFound("face " + std::to_string(dopt.designated_face));
      dopt.designated_face = g_.face_of(g.face_darts(dopt.designated_face).front());
    }
  } else {
    g_ = g;
    origin_.resize(g.num_vertices());
    std::iota(origin_.begin(), origin_.end(), 0);
  }
  n_ = g_.num_vertices();
  div_ = recursive_division(g_, opts.r, dopt);
  index_ = std::make_unique<DdgIndex>(build_ddgs(g_, div_), n_, true);
  init();
}

HkrsEngine::HkrsEngine(int num_vertices, RecursiveDivision div, std::vector<DenseDistanceGraph> ddgs)
    : n_input_(num_vertices), n_(num_vertices), div_(std::move(div)) {
  if (ddgs.size() != div_.at_height[1].size()) throw BadInput("one DDG per height-1 region expected");
  origin_.resize(n_);
  std::iota(origin_.begin(), origin_.end(), 0);
  index_ = std::make_unique<DdgIndex>(std::move(ddgs), n_, true);
  init();
}

void HkrsEngine::init() {
  const int k = div_.num_heights();
  alpha_.assign(k + 1, 1);
  for (int h = 1; h <= k; ++h) {
    const double rh = div_.r_vector[h - 1];
    const double rn = h < k ? div_.r_vector[h] : rh * rh;
    alpha_[h] = std::max(1, static_cast<int>(std::lround(4.0 * std::log(rn) / (3.0 * std::log(rh)))));
  }

  const int nr = static_cast<int>(div_.regions.size());
  parent_.assign(nr, -1);
  slot_.assign(nr, -1);
  children_.assign(nr, {});
  item_base_.assign(nr, 0);
  q_.resize(nr);
  for (const Region& r : div_.regions) {
    parent_[r.id] = r.parent;
    children_[r.id] = r.children;
    std::sort(children_[r.id].begin(), children_[r.id].end());
    for (int i = 0; i < static_cast<int>(children_[r.id].size()); ++i) slot_[children_[r.id][i]] = i;
    if (r.height >= 2) q_[r.id].resize(static_cast<int>(children_[r.id].size()));
  }

  // Height-0 items of each height-1 region: copies by (heap, column), then
  // hyperarcs by (heap, row), then explicit arcs.
  const auto& specs = index_->heaps();
  copy_base_.assign(specs.size(), 0);
  hyper_base_.assign(specs.size(), 0);
  fanout_.assign(n_, {});
  std::size_t next_heap = 0;
  for (std::size_t di = 0; di < div_.at_height[1].size(); ++di) {
    const int rid = div_.at_height[1][di];
    const int base = static_cast<int>(kind_.size());
    item_base_[rid] = base;
    std::size_t end_heap = next_heap;
    while (end_heap < specs.size() && specs[end_heap].ddg == static_cast<int>(di)) ++end_heap;
    auto add = [&](Kind kd, int a, int b, Weight len) {
      kind_.push_back(kd);
      a_.push_back(a);
      b_.push_back(b);
      len_.push_back(len);
      region_.push_back(rid);
    };
    for (std::size_t i = next_heap; i < end_heap; ++i) {
      copy_base_[i] = static_cast<int>(kind_.size());
      for (int c = 0; c < specs[i].p.b_size(); ++c) add(kCopy, static_cast<int>(i), c, 0);
      num_copies_ += specs[i].p.b_size();
    }
    for (std::size_t i = next_heap; i < end_heap; ++i) {
      hyper_base_[i] = static_cast<int>(kind_.size());
      for (int row = 0; row < specs[i].p.a_size(); ++row) {
        fanout_[specs[i].row_vertex[row]].push_back(static_cast<int>(kind_.size()));
        add(kHyper, static_cast<int>(i), row, 0);
      }
      num_hyper_ += specs[i].p.a_size();
    }
    const DenseDistanceGraph& ddg = index_->ddgs()[di];
    for (const ExplicitArc& e : ddg.explicit_arcs) {
      const int u = ddg.boundary[e.from];
      fanout_[u].push_back(static_cast<int>(kind_.size()));
      add(kArc, u, ddg.boundary[e.to], e.len);
    }
    q_[rid].resize(static_cast<int>(kind_.size()) - base);
    next_heap = end_heap;
  }
}

std::vector<HKMongeHeap>& HkrsEngine::heaps() {
  auto& hs = ro_.backend == Backend::kCq3 ? heaps_cq3_ : heaps_cq1_;
  if (hs.empty()) {
    hs.reserve(index_->heaps().size());
    for (const HeapSpec& sp : index_->heaps()) hs.emplace_back(&sp.view, ro_.backend, sp.dynamic.get(), sp.naive);
  } else {
    for (auto& h : hs) h.reset();
  }
  return hs;
}

HkrsResult HkrsEngine::sssp(int s, const HkrsRunOptions& ro) {
  if (s < 0 || s >= n_ || !index_->is_boundary(s))
    throw SourceNotBoundary("vertex " + std::to_string(s));
  ro_ = ro;
  HkrsResult res;
  res_ = &res;
  d_.assign(n_, kInf);
  dcopy_.assign(kind_.size(), kInf);  // indexed by item; only copies are used
  long long heap_ops0 = 0;
  for (auto& q : q_) {
    q.clear();
    heap_ops0 += q.ops();
  }
  auto& hs = heaps();

  d_[s] = 0;
  fan_out(s);
  const int root = div_.root;
  while (!q_[root].empty()) process(root);

  res.dist.assign(n_, kInf);
  for (int v = 0; v < n_; ++v)
    if (index_->is_boundary(v)) res.dist[v] = d_[v];
  for (const auto& q : q_) res.counters.heap_ops += q.ops();
  res.counters.heap_ops -= heap_ops0;
  for (const auto& h : hs) {
    res.counters.mh_ops += h.counters().total();
    res.counters.rmq_ops += h.counters().rmq_ops;
  }
  res_ = nullptr;
  return res;
}

void HkrsEngine::process(int region) {
  const int h = div_.regions[region].height;
  PairingHeap& q = q_[region];
  for (int it = 0; it < alpha_[h] && !q.empty(); ++it) {
    const int x = q.top();
    if (h == 1) {
      q.erase(x);
      process_item(item_base_[region] + x);
    } else {
      const int child = children_[region][x];
      process(child);
      q.set(x, q_[child].min_key());
    }
  }
}

void HkrsEngine::process_item(int item) {
  ++res_->counters.h0_procs;
  const auto& specs = index_->heaps();
  switch (kind_[item]) {
    case kHyper: {
      const int i = a_[item], row = b_[item];
      const HeapSpec& sp = specs[i];
      const int v = sp.row_vertex[row];
      const Weight dv = d_[v];
      if (ro_.trace)
        res_->trace.push_back({TraceEvent::kHyper, v, i, dv});
      if (ro_.algorithm_h) {
        for (int b = 0; b < sp.p.b_size(); ++b) {
          const Weight lab = sat_add(dv, sp.view(row, b));
          if (lab < dcopy_[copy_base_[i] + b]) set_copy(i, b, lab);
        }
      } else {
        HKMongeHeap& hp = (ro_.backend == Backend::kCq3 ? heaps_cq3_ : heaps_cq1_)[i];
        shrunk_.clear();
        hp.relax(row, dv, &shrunk_);
        const Child c = hp.get_min_child(row);
        if (c.col >= 0 && c.label < dcopy_[copy_base_[i] + c.col]) set_copy(i, c.col, c.label);
        // A row whose accurate minimum was taken over needs a new one.
        for (int u : shrunk_) {
          const Child cu = hp.get_min_child(u);
          if (cu.col >= 0 && cu.label < dcopy_[copy_base_[i] + cu.col]) set_copy(i, cu.col, cu.label);
        }
        if (ro_.check_invariants) check_invariants(i);
      }
      break;
    }
    case kCopy: {
      const int i = a_[item], b = b_[item];
      const int w = specs[i].col_vertex[b];
      const Weight lab = dcopy_[copy_base_[i] + b];
      if (ro_.trace)
        res_->trace.push_back({TraceEvent::kCopy, w, i, lab});
      if (d_[w] > lab) {
        d_[w] = lab;
        fan_out(w);
      }
      if (!ro_.algorithm_h) {
        HKMongeHeap& hp = (ro_.backend == Backend::kCq3 ? heaps_cq3_ : heaps_cq1_)[i];
        const Child c = hp.extract(b);
        if (c.col >= 0 && c.label < dcopy_[copy_base_[i] + c.col]) set_copy(i, c.col, c.label);
        if (ro_.check_invariants) check_invariants(i);
      }
      break;
    }
    case kArc: {
      const int u = a_[item], w = b_[item];
      if (ro_.trace)
        res_->trace.push_back({TraceEvent::kArc, u, w, d_[u]});
      const Weight lab = sat_add(d_[u], len_[item]);
      if (lab < d_[w]) {
        d_[w] = lab;
        fan_out(w);
      }
      break;
    }
  }
}

void HkrsEngine::set_copy(int heap, int col, Weight label) {
  dcopy_[copy_base_[heap] + col] = label;
  update_item(copy_base_[heap] + col, label);
}

void HkrsEngine::fan_out(int v) {
  for (int item : fanout_[v]) update_item(item, d_[v]);
}

void HkrsEngine::update_item(int item, Weight k) {
  ++res_->counters.update_calls;
  chain_ = 1;
  const int region = region_[item];
  const int local = item - item_base_[region];
  const Weight cur = q_[region].key(local);
  if (k > cur) throw KeyIncrease("item " + std::to_string(item));
  if (k < cur) update_region(region, local, k);
  res_->max_update_chain = std::max(res_->max_update_chain, chain_);
}

void HkrsEngine::update_region(int region, int local, Weight k) {
  ++res_->counters.update_calls;
  ++chain_;
  PairingHeap& q = q_[region];
  // Above height 1 the stored key of a region being processed may still be
  // its old, smaller minimum; that is not a decrease.
  if (k >= q.key(local)) return;
  const Weight before = q.min_key();
  q.decrease(local, k);
  if (q.min_key() < before && parent_[region] >= 0) update_region(parent_[region], slot_[region], k);
}

void HkrsEngine::check_invariants(int heap) {
  const HKMongeHeap& hp = (ro_.backend == Backend::kCq3 ? heaps_cq3_ : heaps_cq1_)[heap];
  const int base = copy_base_[heap];
  const int region = region_[base];
  const int cols = hp.cols();
  long long bad = 0;
  auto accurate = [&](int b) { return dcopy_[base + b] <= hp.implicit_label(b); };
  for (int b = 0; b < cols; ++b) {
    if (dcopy_[base + b] < hp.implicit_label(b)) ++bad;  // label below every relaxation
    if (!accurate(b) && !hp.active(b)) ++bad;           // latent => active
    if (q_[region].key(base + b - item_base_[region]) < kInf && !hp.active(b)) ++bad;
  }
  for (int v = 0; v < hp.rows(); ++v) {
    if (!hp.relaxed(v)) continue;
    const auto [x, y] = hp.intervals().interval(v);
    Weight best = kInf;
    for (int b = x; b <= y; ++b)
      if (hp.active(b)) best = std::min(best, hp.implicit_label(b));
    if (best >= kInf) continue;
    bool found = false;
    for (int b = x; b <= y && !found; ++b) found = hp.active(b) && hp.implicit_label(b) == best && accurate(b);
    if (!found) ++bad;
  }
  ++res_->invariant_checks;
  res_->invariant_violations += bad;
}

}  // namespace pgsp
