#include "pgsp/ddg.hpp"

#include <algorithm>
#include <sstream>

namespace pgsp {

namespace {

bool hole_is_monge(const DenseDistanceGraph& ddg, int hole) {
  const HoleSpan& hs = ddg.holes[hole];
  for (int x = hs.offset; x < hs.offset + hs.size; ++x)
    for (int y = hs.offset; y < hs.offset + hs.size; ++y)
      if (ddg.dist.at(x, y) >= kInf) return false;
  if (hs.size <= 2) return true;
  const MongeView full = MongeView(ddg.dist).submatrix(hs.offset, hs.offset, hs.size, hs.size);
  std::vector<int> lo(hs.size), hi(hs.size);
  for (int i = 0; i < hs.size; ++i) {
    lo[i] = i + 1;
    hi[i] = hs.size - 1;
  }
  if (!is_monge(complete_partial(full.with_rows(lo, hi)))) return false;
  for (int i = 0; i < hs.size; ++i) {
    lo[i] = 0;
    hi[i] = i - 1;
  }
  return is_monge(complete_partial(full.with_rows(lo, hi)));
}

}  // namespace

MongeView DenseDistanceGraph::piece_view(const Piece& p) const {
  const int off = holes[p.hole].offset;
  return MongeView(dist).submatrix(off + p.a_lo, off + p.b_lo, p.a_size(), p.b_size());
}

std::vector<Piece> bipartite_decompose(int hole, int k) {
  std::vector<Piece> out;
  std::vector<std::pair<int, int>> stack{{0, k}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo <= 1) continue;
    const int mid = (lo + hi) / 2;
    out.push_back({hole, lo, mid, mid, hi});
    out.push_back({hole, mid, hi, lo, mid});
    stack.push_back({mid, hi});
    stack.push_back({lo, mid});
  }
  return out;
}

DenseDistanceGraph build_ddg(const EmbeddedPlanarGraph& g, const Region& region) {
  DenseDistanceGraph ddg;
  ddg.region = region.id;
  for (std::size_t h = 0; h < region.holes.size(); ++h) {
    HoleSpan hs;
    hs.offset = static_cast<int>(ddg.boundary.size());
    hs.size = static_cast<int>(region.holes[h].size());
    ddg.holes.push_back(hs);
    for (int v : region.holes[h]) {
      ddg.boundary.push_back(v);
      ddg.hole_of.push_back(static_cast<int>(h));
    }
  }
  const int k = ddg.size();
  ddg.dist = DenseMatrix(k, k, kInf);

  // Region-local arc list.
  const auto& verts = region.vertices;
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<Arc> arcs;
  arcs.reserve(region.edges.size() * 2);
  for (int e : region.edges)
    for (int d : {2 * e, 2 * e + 1}) {
      if (g.length(d) >= kInf) continue;
      if (g.length(d) < 0) throw NegativeLength("dart " + std::to_string(d));
      arcs.push_back({local(g.tail(d)), local(g.head(d)), g.length(d)});
    }
  const int nv = static_cast<int>(verts.size());
  std::vector<int> bl(k);
  for (int x = 0; x < k; ++x) bl[x] = local(ddg.boundary[x]);
  for (int x = 0; x < k; ++x) {
    const auto dist = dijkstra_arcs(nv, arcs, bl[x]);
    for (int y = 0; y < k; ++y) ddg.dist.at(x, y) = dist[bl[y]];
  }

  for (int h = 0; h < static_cast<int>(ddg.holes.size()); ++h) {
    ddg.holes[h].monge = hole_is_monge(ddg, h);
    if (ddg.holes[h].monge) {
      auto p = bipartite_decompose(h, ddg.holes[h].size);
      ddg.pieces.insert(ddg.pieces.end(), p.begin(), p.end());
    }
  }
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (x == y || ddg.dist.at(x, y) >= kInf) continue;
      const int hx = ddg.hole_of[x], hy = ddg.hole_of[y];
      if (hx != hy || !ddg.holes[hx].monge) ddg.explicit_arcs.push_back({x, y, ddg.dist.at(x, y)});
    }
  return ddg;
}

std::vector<DenseDistanceGraph> build_ddgs(const EmbeddedPlanarGraph& g, const RecursiveDivision& div) {
  std::vector<DenseDistanceGraph> out;
  out.reserve(div.at_height[1].size());
  for (int id : div.at_height[1]) out.push_back(build_ddg(g, div.regions[id]));
  return out;
}

std::pair<MongeView, MongeView> triangle_views(const DenseDistanceGraph& ddg, int hole) {
  const HoleSpan& hs = ddg.holes.at(hole);
  const MongeView full = MongeView(ddg.dist).submatrix(hs.offset, hs.offset, hs.size, hs.size);
  std::vector<int> lo(hs.size), hi(hs.size);
  for (int i = 0; i < hs.size; ++i) {
    lo[i] = i + 1;
    hi[i] = hs.size - 1;
  }
  MongeView upper = full.with_rows(lo, hi);
  for (int i = 0; i < hs.size; ++i) {
    lo[i] = 0;
    hi[i] = i - 1;
  }
  MongeView lower = full.with_rows(lo, hi);
  try {
    upper = complete_partial(upper);
    lower = complete_partial(lower);
  } catch (const BadInput& e) {
    throw MongeViolation(std::string("hole has unreachable pairs: ") + e.what());
  }
  if (!is_monge(upper) || !is_monge(lower)) throw MongeViolation("hole " + std::to_string(hole));
  return {upper, lower};
}

std::vector<Arc> ddg_union_arcs(const std::vector<DenseDistanceGraph>& ddgs) {
  std::vector<Arc> arcs;
  for (const auto& d : ddgs)
    for (int x = 0; x < d.size(); ++x)
      for (int y = 0; y < d.size(); ++y)
        if (x != y && d.dist.at(x, y) < kInf) arcs.push_back({d.boundary[x], d.boundary[y], d.dist.at(x, y)});
  return arcs;
}

std::string dump_ddg(const DenseDistanceGraph& ddg) {
  std::ostringstream out;
  out << "ddg " << ddg.region << ' ' << ddg.size() << '\n';
  for (int x = 0; x < ddg.size(); ++x) {
    for (int y = 0; y < ddg.size(); ++y) {
      if (y) out << ' ';
      const Weight w = ddg.dist.at(x, y);
      if (w >= kInf) out << "inf";
      else out << w;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pgsp
