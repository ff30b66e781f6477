#include "pgsp/fr_dijkstra.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "pgsp/pairing_heap.hpp"

namespace pgsp {

DdgIndex::DdgIndex(std::vector<DenseDistanceGraph> ddgs, int num_vertices, bool with_dynamic)
    : ddgs_(std::move(ddgs)), n_(num_vertices), boundary_(num_vertices, 0), as_row_(num_vertices),
      as_col_(num_vertices), explicit_out_(num_vertices), holes_of_(num_vertices) {
  triangles_.resize(ddgs_.size());
  for (int di = 0; di < static_cast<int>(ddgs_.size()); ++di) {
    const DenseDistanceGraph& d = ddgs_[di];
    for (int x = 0; x < d.size(); ++x) {
      const int v = d.boundary[x];
      if (v < 0 || v >= n_) throw BadInput("DDG vertex " + std::to_string(v) + " out of range");
      boundary_[v] = 1;
      const int h = d.hole_of[x];
      holes_of_[v].push_back({di, h, x - d.holes[h].offset});
    }
    for (const ExplicitArc& a : d.explicit_arcs) {
      explicit_out_[d.boundary[a.from]].push_back({d.boundary[a.to], a.len});
      ++num_explicit_;
    }
    triangles_[di].resize(d.holes.size());
    for (int h = 0; h < static_cast<int>(d.holes.size()); ++h)
      if (d.holes[h].monge && d.holes[h].size >= 2) triangles_[di][h] = triangle_views(d, h);
    for (int pi = 0; pi < static_cast<int>(d.pieces.size()); ++pi) {
      HeapSpec hs;
      hs.ddg = di;
      hs.piece = pi;
      hs.p = d.pieces[pi];
      hs.view = d.piece_view(hs.p);
      const int off = d.holes[hs.p.hole].offset;
      for (int a = hs.p.a_lo; a < hs.p.a_hi; ++a) hs.row_vertex.push_back(d.boundary[off + a]);
      for (int b = hs.p.b_lo; b < hs.p.b_hi; ++b) hs.col_vertex.push_back(d.boundary[off + b]);
      hs.naive = NaiveMongeRMQ::build_template(hs.view);
      if (with_dynamic) hs.dynamic = std::make_shared<const DynamicMongeRMQ>(hs.view);
      const int id = static_cast<int>(heaps_.size());
      for (int a = 0; a < static_cast<int>(hs.row_vertex.size()); ++a) as_row_[hs.row_vertex[a]].push_back({id, a});
      for (int b = 0; b < static_cast<int>(hs.col_vertex.size()); ++b) as_col_[hs.col_vertex[b]].push_back({id, b});
      heaps_.push_back(std::move(hs));
    }
  }
}

std::vector<int> DdgIndex::boundary_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (boundary_[v]) out.push_back(v);
  return out;
}

std::vector<Arc> DdgIndex::union_arcs() const { return ddg_union_arcs(ddgs_); }

namespace {

void require_source(const DdgIndex& index, int s) {
  if (s < 0 || s >= index.num_vertices() || !index.is_boundary(s))
    throw SourceNotBoundary("vertex " + std::to_string(s));
}

void check_monotone(Weight& last, Weight label) {
  if (label < last) throw std::logic_error("extraction order decreased");
  last = label;
}

}  // namespace

// ------------------------------------------------------------- baseline

FrDijkstra::FrDijkstra(const DdgIndex& index)
    : index_(index), version_(index.heaps().size(), 0), fin_(index.num_vertices(), 0) {
  heaps_.reserve(index.heaps().size());
  for (const HeapSpec& hs : index.heaps()) heaps_.emplace_back(&hs.view, hs.naive);
}

SsspResult FrDijkstra::run(int s) {
  require_source(index_, s);
  const auto& specs = index_.heaps();
  SsspResult res;
  res.dist.assign(index_.num_vertices(), kInf);
  std::fill(fin_.begin(), fin_.end(), 0);
  for (auto& h : heaps_) h.reset();

  // (label, kind, id, version): kind 0 is a vertex reached by an explicit
  // arc, kind 1 the current minimum of a Monge heap.
  using Entry = std::tuple<Weight, int, int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;

  auto push_rep = [&](int i) {
    ++version_[i];
    const Child c = heaps_[i].find_min();
    if (c.col >= 0) {
      pq.emplace(c.label, 1, i, version_[i]);
      ++res.counters.heap_ops;
    }
  };
  auto finalize = [&](int v, Weight dv) {
    fin_[v] = 1;
    res.dist[v] = dv;
    ++res.counters.extractions;
    for (const Slot& sl : index_.as_row(v)) {
      heaps_[sl.heap].activate(sl.pos, dv);
      push_rep(sl.heap);
    }
    for (const auto& [w, len] : index_.explicit_out(v))
      if (!fin_[w]) {
        pq.emplace(sat_add(dv, len), 0, w, 0);
        ++res.counters.heap_ops;
      }
  };

  finalize(s, 0);
  Weight last = 0;
  while (!pq.empty()) {
    const auto [label, kind, id, ver] = pq.top();
    pq.pop();
    ++res.counters.heap_ops;
    if (kind == 1) {
      if (ver != version_[id]) continue;
      check_monotone(last, label);
      const Child c = heaps_[id].extract_min();
      const int w = specs[id].col_vertex[c.col];
      push_rep(id);
      if (!fin_[w]) finalize(w, c.label);
    } else if (!fin_[id]) {
      check_monotone(last, label);
      finalize(id, label);
    }
  }
  for (const auto& h : heaps_) {
    res.counters.mh_ops += h.counters().total();
    res.counters.rmq_ops += h.counters().rmq_ops;
  }
  return res;
}

SsspResult fr_dijkstra(const DdgIndex& index, int s) { return FrDijkstra(index).run(s); }

// ------------------------------------------------------------ single copy

SingleCopyDijkstra::SingleCopyDijkstra(const DdgIndex& index)
    : index_(index), watchers_(index.num_vertices()), fin_(index.num_vertices(), 0) {
  const auto& ddgs = index.ddgs();
  hole_base_.assign(ddgs.size() + 1, 0);
  for (std::size_t di = 0; di < ddgs.size(); ++di) hole_base_[di + 1] = hole_base_[di] + ddgs[di].holes.size();
  proto_.resize(hole_base_.back());
  rmq_.resize(hole_base_.back());
  for (std::size_t di = 0; di < ddgs.size(); ++di)
    for (std::size_t h = 0; h < ddgs[di].holes.size(); ++h) {
      const auto& views = index.triangles(di, h);
      if (!views) continue;
      const int at = hole_base_[di] + h;
      proto_[at][0] = std::make_unique<DecrementalMongeRMQ>(views->first);
      proto_[at][1] = std::make_unique<DecrementalMongeRMQ>(views->second);
      rmq_[at][0] = std::make_unique<DecrementalMongeRMQ>(*proto_[at][0]);
      rmq_[at][1] = std::make_unique<DecrementalMongeRMQ>(*proto_[at][1]);
    }
  pi_.reserve(index.heaps().size());
  for (const HeapSpec& hs : index.heaps()) {
    pi_.emplace_back(&hs.view);
    cand_.emplace_back(hs.p.a_size(), -1);
  }
}

SsspResult SingleCopyDijkstra::run(int s) {
  require_source(index_, s);
  const int n = index_.num_vertices();
  const auto& specs = index_.heaps();
  SsspResult res;
  res.dist.assign(n, kInf);
  std::fill(fin_.begin(), fin_.end(), 0);
  for (auto& w : watchers_) w.clear();
  for (std::size_t i = 0; i < rmq_.size(); ++i)
    if (proto_[i][0]) {
      *rmq_[i][0] = *proto_[i][0];
      *rmq_[i][1] = *proto_[i][1];
    }
  for (auto& p : pi_) p.reset();
  for (auto& c : cand_) std::fill(c.begin(), c.end(), -1);
  PairingHeap q(n);
  long long mh = 0;

  auto requery = [&](int i, int row) {
    const HeapSpec& hs = specs[i];
    const auto [x, y] = pi_[i].interval(row);
    cand_[i][row] = -1;
    if (x > y) return;
    DecrementalMongeRMQ& r = *rmq_[hole_base_[hs.ddg] + hs.p.hole][hs.p.a_lo < hs.p.b_lo ? 0 : 1];
    ++res.counters.rmq_ops;
    ++mh;
    const RmqAnswer a = r.query(hs.p.a_lo + row, hs.p.b_lo + x, hs.p.b_lo + y);
    if (a.col < 0) return;
    const int col = a.col - hs.p.b_lo;
    cand_[i][row] = col;
    const int w = hs.col_vertex[col];
    watchers_[w].push_back({i, row});
    const Weight lab = sat_add(pi_[i].label(row), hs.view(row, col));
    if (!fin_[w] && lab < q.key(w)) q.decrease(w, lab);
  };
  std::vector<Slot> watching;
  std::vector<int> touched;
  auto finalize = [&](int v, Weight dv) {
    fin_[v] = 1;
    res.dist[v] = dv;
    ++res.counters.extractions;
    for (const auto& hsl : index_.holes_of(v)) {
      auto& pair = rmq_[hole_base_[hsl.ddg] + hsl.hole];
      if (!pair[0]) continue;
      pair[0]->deactivate_col(hsl.pos);
      pair[1]->deactivate_col(hsl.pos);
      res.counters.rmq_ops += 2;
    }
    // Rows whose candidate just left re-query their interval.
    watching.swap(watchers_[v]);
    for (const Slot& sl : watching) {
      const int c = cand_[sl.heap][sl.pos];
      if (c >= 0 && specs[sl.heap].col_vertex[c] == v) requery(sl.heap, sl.pos);
    }
    watching.clear();
    for (const Slot& sl : index_.as_row(v)) {
      touched.clear();
      ++mh;
      pi_[sl.heap].relax(sl.pos, dv, &touched);
      requery(sl.heap, sl.pos);
      for (int u : touched) requery(sl.heap, u);
    }
    for (const auto& [x, len] : index_.explicit_out(v)) {
      const Weight lab = sat_add(dv, len);
      if (!fin_[x] && lab < q.key(x)) q.decrease(x, lab);
    }
  };

  finalize(s, 0);
  Weight last = 0;
  while (!q.empty()) {
    const Weight k = q.min_key();
    const int v = q.pop();
    check_monotone(last, k);
    finalize(v, k);
  }
  res.counters.heap_ops = q.ops();
  res.counters.mh_ops = mh;
  return res;
}

SsspResult fr_dijkstra_single_copy(const DdgIndex& index, int s) { return SingleCopyDijkstra(index).run(s); }

SsspResult ddg_dijkstra(const DdgIndex& index, int s) {
  require_source(index, s);
  SsspResult res;
  res.dist = dijkstra_arcs(index.num_vertices(), index.union_arcs(), s);
  for (int v = 0; v < index.num_vertices(); ++v)
    if (!index.is_boundary(v)) res.dist[v] = kInf;
  return res;
}

}  // namespace pgsp
