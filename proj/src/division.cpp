#include "pgsp/division.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pgsp {

namespace {

// Splits edge sets into pieces of at most `limit` vertices.
class Splitter {
 public:
  Splitter(const EmbeddedPlanarGraph& g, double budget)
      : g_(g), budget_(budget), emark_(g.num_edges(), 0), vmark_(g.num_vertices(), 0),
        level_(g.num_vertices(), -1) {}

  std::vector<std::vector<int>> split(std::vector<int> edges, int limit) {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> stack;
    stack.push_back(std::move(edges));
    while (!stack.empty()) {
      std::vector<int> piece = std::move(stack.back());
      stack.pop_back();
      if (piece.empty()) continue;
      std::vector<int> verts = mark(piece);
      if (fits(piece, verts, limit)) {
        out.push_back(std::move(piece));
        continue;
      }
      auto comps = components(piece, verts);
      if (comps.size() > 1) {
        // Pack fitting components together, split the rest further.
        std::vector<int> group;
        int group_v = 0;
        for (auto& c : comps) {
          std::vector<int> cv = mark(c);
          if (!fits(c, cv, limit)) {
            stack.push_back(std::move(c));
            continue;
          }
          const int nv = static_cast<int>(cv.size());
          if (group_v + nv > limit && !group.empty()) {
            out.push_back(std::move(group));
            group.clear();
            group_v = 0;
          }
          group.insert(group.end(), c.begin(), c.end());
          group_v += nv;
        }
        if (!group.empty()) {
          std::sort(group.begin(), group.end());
          out.push_back(std::move(group));
        }
        continue;
      }
      auto [a, b] = bisect(piece, verts);
      stack.push_back(std::move(b));
      stack.push_back(std::move(a));
    }
    return out;
  }

 private:
  std::vector<int> mark(const std::vector<int>& piece) {
    ++stamp_;
    std::vector<int> verts;
    for (int e : piece) {
      emark_[e] = stamp_;
      for (int x : {g_.head(2 * e), g_.head(2 * e + 1)})
        if (vmark_[x] != stamp_) {
          vmark_[x] = stamp_;
          verts.push_back(x);
        }
    }
    return verts;
  }

  bool fits(const std::vector<int>& piece, const std::vector<int>& verts, int limit) const {
    if (piece.size() <= 1) return true;
    if (static_cast<int>(verts.size()) > limit) return false;
    if (budget_ <= 0) return true;
    int bnd = 0;
    for (int v : verts)
      for (int d : g_.rotation(v))
        if (emark_[d >> 1] != stamp_) {
          ++bnd;
          break;
        }
    return bnd <= budget_ * std::sqrt(static_cast<double>(limit));
  }

  // Requires mark(piece) to be current.
  std::vector<std::vector<int>> components(const std::vector<int>& piece, const std::vector<int>& verts) {
    for (int v : verts) level_[v] = -1;
    std::vector<std::vector<int>> comps;
    std::vector<int> queue;
    for (int e : piece) {
      const int root = g_.tail(2 * e);
      if (level_[root] >= 0) continue;
      std::vector<int> ce;
      queue.assign(1, root);
      level_[root] = 0;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const int v = queue[q];
        for (int d : g_.rotation(v)) {
          if (emark_[d >> 1] != stamp_) continue;
          ce.push_back(d >> 1);
          const int w = g_.head(d);
          if (level_[w] < 0) {
            level_[w] = 0;
            queue.push_back(w);
          }
        }
      }
      std::sort(ce.begin(), ce.end());
      ce.erase(std::unique(ce.begin(), ce.end()), ce.end());
      comps.push_back(std::move(ce));
    }
    return comps;
  }

  void bfs(int src, const std::vector<int>& verts) {
    for (int v : verts) level_[v] = -1;
    std::vector<int> queue{src};
    level_[src] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int v = queue[q];
      for (int d : g_.rotation(v)) {
        if (emark_[d >> 1] != stamp_) continue;
        const int w = g_.head(d);
        if (level_[w] < 0) {
          level_[w] = level_[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  // Requires mark(piece) current and the piece connected.
  std::pair<std::vector<int>, std::vector<int>> bisect(const std::vector<int>& piece,
                                                       const std::vector<int>& verts) {
    bfs(*std::min_element(verts.begin(), verts.end()), verts);
    int far = -1;
    for (int v : verts)
      if (far < 0 || level_[v] > level_[far] || (level_[v] == level_[far] && v < far)) far = v;
    bfs(far, verts);
    std::vector<int> lv;
    lv.reserve(verts.size());
    for (int v : verts) lv.push_back(level_[v]);
    std::sort(lv.begin(), lv.end());
    const int max_level = lv.back();
    const int cut = std::clamp(lv[(lv.size() - 1) / 2], 1, std::max(1, max_level));
    auto low = [&](int e) { return std::min(level_[g_.head(2 * e)], level_[g_.head(2 * e + 1)]); };
    std::vector<int> a, b;
    for (int e : piece) (low(e) < cut ? a : b).push_back(e);
    if (a.empty() || b.empty()) {
      std::vector<int> sorted = piece;
      std::stable_sort(sorted.begin(), sorted.end(), [&](int x, int y) { return low(x) < low(y); });
      const auto half = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
      a.assign(sorted.begin(), half);
      b.assign(half, sorted.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
    }
    return {std::move(a), std::move(b)};
  }

  const EmbeddedPlanarGraph& g_;
  double budget_;
  std::vector<int> emark_, vmark_, level_;
  int stamp_ = 0;
};

// Boundary, holes and diagnostics for all regions of one height.
void finish_height(const EmbeddedPlanarGraph& g, RecursiveDivision& div, int h, const DivisionOptions& opts,
                   std::vector<int>& region_of_edge) {
  const int n = g.num_vertices();
  const auto& ids = div.at_height[h];
  for (int id : ids)
    for (int e : div.regions[id].edges) region_of_edge[e] = id;

  std::vector<char> is_boundary(n, 0);
  for (int v = 0; v < n; ++v) {
    std::vector<int> seen;
    for (int d : g.rotation(v)) {
      const int rid = region_of_edge[d >> 1];
      if (std::find(seen.begin(), seen.end(), rid) == seen.end()) seen.push_back(rid);
    }
    const int distinct = static_cast<int>(seen.size());
    if (distinct >= 2 || (div.mandatory[v] && distinct >= 1)) is_boundary[v] = 1;
    div.max_regions_per_vertex = std::max(div.max_regions_per_vertex, distinct);
    if (is_boundary[v]) div.vertex_height[v] = std::max(div.vertex_height[v], h);
  }

  const int m = g.num_darts();
  std::vector<int> succ(m, -1);    // region rotation successor
  std::vector<char> seen(m, 0);
  std::vector<int> home(n, -1);    // dart whose head corner is v's home corner
  for (int id : ids) {
    Region& R = div.regions[id];
    std::vector<int> darts;
    for (int v : R.vertices) {
      std::vector<int> own;
      for (int d : g.rotation(v))
        if (region_of_edge[d >> 1] == id) own.push_back(d);
      for (std::size_t i = 0; i < own.size(); ++i) succ[own[i]] = own[(i + 1) % own.size()];
    }
    for (int e : R.edges) {
      darts.push_back(2 * e);
      darts.push_back(2 * e + 1);
    }
    // Walk region faces and pick each boundary vertex's home corner.
    std::vector<std::vector<int>> walks;
    for (int d0 : darts) {
      if (seen[d0]) continue;
      std::vector<int> walk;
      int d = d0;
      do {
        seen[d] = 1;
        walk.push_back(d);
        d = succ[d ^ 1];
      } while (d != d0);
      walks.push_back(std::move(walk));
    }
    std::vector<std::vector<int>> hole_corners(walks.size());
    for (std::size_t w = 0; w < walks.size(); ++w)
      for (int d : walks[w]) {
        const int v = g.head(d);
        if (!is_boundary[v] || home[v] >= 0) continue;
        const bool gap = succ[d ^ 1] != g.rot_next(d ^ 1);
        const bool designated = opts.designated_face >= 0 && g.face_of(d) == opts.designated_face;
        if (gap || designated) {
          home[v] = d;
          hole_corners[w].push_back(v);
        }
      }
    R.holes.clear();
    for (auto& hc : hole_corners) {
      if (hc.empty()) continue;
      std::rotate(hc.begin(), std::min_element(hc.begin(), hc.end()), hc.end());
      R.holes.push_back(std::move(hc));
    }
    for (int v : R.vertices)
      if (is_boundary[v] && home[v] < 0) R.holes.push_back({v});
    std::sort(R.holes.begin(), R.holes.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    R.boundary.clear();
    for (const auto& hole : R.holes) R.boundary.insert(R.boundary.end(), hole.begin(), hole.end());
    for (int v : R.vertices) home[v] = -1;
    for (int d : darts) seen[d] = 0;
    div.max_holes = std::max(div.max_holes, static_cast<int>(R.holes.size()));
    if (static_cast<int>(R.holes.size()) > opts.hole_budget) ++div.over_hole_budget;
  }
}

std::vector<int> vertices_of(const EmbeddedPlanarGraph& g, const std::vector<int>& edges, std::vector<int>& mark,
                             int stamp) {
  std::vector<int> out;
  for (int e : edges)
    for (int x : {g.head(2 * e), g.head(2 * e + 1)})
      if (mark[x] != stamp) {
        mark[x] = stamp;
        out.push_back(x);
      }
  std::sort(out.begin(), out.end());
  return out;
}

RecursiveDivision build(const EmbeddedPlanarGraph& g, std::vector<int> rv, const DivisionOptions& opts) {
  const int n = g.num_vertices();
  RecursiveDivision div;
  div.r_vector = std::move(rv);
  div.vertex_height.assign(n, 0);
  div.mandatory.assign(n, false);
  for (int v : opts.mandatory) {
    if (v < 0 || v >= n) throw BadParams("mandatory vertex out of range");
    div.mandatory[v] = true;
  }
  const int k = div.num_heights();
  div.at_height.assign(k + 1, {});

  std::vector<int> mark(n, 0);
  int stamp = 0;
  Region root;
  root.id = 0;
  root.height = k;
  root.edges.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) root.edges[e] = e;
  root.vertices = vertices_of(g, root.edges, mark, ++stamp);
  div.regions.push_back(std::move(root));
  div.root = 0;
  div.at_height[k].push_back(0);

  Splitter splitter(g, opts.boundary_budget);
  for (int h = k - 1; h >= 1; --h) {
    for (int pid : div.at_height[h + 1]) {
      auto pieces = splitter.split(div.regions[pid].edges, div.r_vector[h - 1]);
      for (auto& p : pieces) {
        Region R;
        R.id = static_cast<int>(div.regions.size());
        R.height = h;
        R.parent = pid;
        std::sort(p.begin(), p.end());
        R.edges = std::move(p);
        R.vertices = vertices_of(g, R.edges, mark, ++stamp);
        div.regions[pid].children.push_back(R.id);
        div.at_height[h].push_back(R.id);
        div.regions.push_back(std::move(R));
      }
    }
  }
  std::vector<int> region_of_edge(g.num_edges(), -1);
  for (int h = 1; h <= k; ++h) finish_height(g, div, h, opts, region_of_edge);
  return div;
}

}  // namespace

std::vector<int> r_vector_for(int n, int r) {
  if (r < 4) throw BadParams("r must be >= 4");
  std::vector<int> rv{r};
  while (rv.back() < n) {
    const long long next = static_cast<long long>(rv.back()) * rv.back();
    rv.push_back(static_cast<int>(std::min<long long>(next, 1LL << 30)));
  }
  return rv;
}

RecursiveDivision recursive_division(const EmbeddedPlanarGraph& g, int r, const DivisionOptions& opts) {
  return build(g, r_vector_for(g.num_vertices(), r), opts);
}

RecursiveDivision r_division(const EmbeddedPlanarGraph& g, int r, const DivisionOptions& opts) {
  if (r < 4) throw BadParams("r must be >= 4");
  std::vector<int> rv{r};
  if (r < g.num_vertices()) rv.push_back(std::max(g.num_vertices(), r + 1));
  return build(g, rv, opts);
}

std::string dump_division(const RecursiveDivision& div) {
  std::ostringstream out;
  for (const auto& R : div.regions) {
    out << "R " << R.id << ' ' << R.height << ' ' << R.parent << " |";
    for (int v : R.vertices) out << ' ' << v;
    out << " |";
    for (std::size_t i = 0; i < R.holes.size(); ++i) {
      out << (i ? " ;" : "");
      for (int v : R.holes[i]) out << ' ' << v;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pgsp
