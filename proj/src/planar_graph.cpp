#include "pgsp/planar_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace pgsp {

int EmbeddedPlanarGraph::max_degree() const {
  int m = 0;
  for (const auto& r : rot_) m = std::max(m, static_cast<int>(r.size()));
  return m;
}

int EmbeddedPlanarGraph::rot_next(int d) const {
  const auto& r = rot_[tail(d)];
  int p = rot_pos_[d] + 1;
  return r[p == static_cast<int>(r.size()) ? 0 : p];
}

int EmbeddedPlanarGraph::rot_prev(int d) const {
  const auto& r = rot_[tail(d)];
  int p = rot_pos_[d];
  return r[p == 0 ? r.size() - 1 : p - 1];
}

void EmbeddedPlanarGraph::rebuild_faces() {
  const int m = num_darts();
  rot_pos_.assign(m, -1);
  for (int v = 0; v < n_; ++v)
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) rot_pos_[rot_[v][i]] = i;
  face_of_.assign(m, -1);
  faces_.clear();
  for (int d0 = 0; d0 < m; ++d0) {
    if (face_of_[d0] != -1) continue;
    const int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    int d = d0;
    do {
      face_of_[d] = f;
      faces_[f].push_back(d);
      d = face_next(d);
    } while (d != d0);
  }
}

int EmbeddedPlanarGraph::edge_components() const {
  std::vector<int> comp(n_, -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1 || rot_[s].empty()) continue;
    ++count;
    comp[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : rot_[v]) {
        int w = head(d);
        if (comp[w] == -1) {
          comp[w] = s;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

int EmbeddedPlanarGraph::insert_edge_in_face(int du, int dv, Weight len_uv, Weight len_vu,
                                             Weight cap_uv, Weight cap_vu) {
  if (face_of_[du] != face_of_[dv]) throw InvalidRotation("corner darts lie on different faces");
  const int u = head(du);
  const int v = head(dv);
  const int x = num_darts();
  head_.push_back(v);
  head_.push_back(u);
  len_.push_back(len_uv);
  len_.push_back(len_vu);
  cap_.push_back(cap_uv);
  cap_.push_back(cap_vu);
  // The corner of the face at u sits right after rev(du) in CCW order.
  auto& ru = rot_[u];
  ru.insert(std::find(ru.begin(), ru.end(), rev(du)) + 1, x);
  auto& rv = rot_[v];
  rv.insert(std::find(rv.begin(), rv.end(), rev(dv)) + 1, x + 1);
  rebuild_faces();
  return x;
}

void EmbeddedPlanarGraph::truncate_edges(int m) {
  const int keep = 2 * m;
  if (keep >= num_darts()) return;
  for (auto& r : rot_)
    r.erase(std::remove_if(r.begin(), r.end(), [&](int d) { return d >= keep; }), r.end());
  head_.resize(keep);
  len_.resize(keep);
  cap_.resize(keep);
  rebuild_faces();
}

EmbeddedPlanarGraph build_graph_darts(int n, const std::vector<EdgeSpec>& edges,
                                      const std::vector<std::vector<int>>& rotation,
                                      bool allow_multi) {
  if (n < 0) throw InvalidRotation("negative vertex count");
  if (static_cast<int>(rotation.size()) != n)
    throw InvalidRotation("rotation has " + std::to_string(rotation.size()) + " entries, expected " +
                          std::to_string(n));
  EmbeddedPlanarGraph g;
  g.n_ = n;
  const int m = static_cast<int>(edges.size());
  g.head_.resize(2 * m);
  g.len_.resize(2 * m);
  g.cap_.resize(2 * m);
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < m; ++e) {
    const auto& s = edges[e];
    if (s.u < 0 || s.u >= n || s.v < 0 || s.v >= n)
      throw InvalidRotation("edge " + std::to_string(e) + " endpoint out of range");
    if (!allow_multi) {
      if (s.u == s.v) throw InvalidRotation("self-loop at vertex " + std::to_string(s.u));
      auto key = std::minmax(s.u, s.v);
      if (!seen.insert(key).second)
        throw InvalidRotation("parallel edge " + std::to_string(s.u) + "-" + std::to_string(s.v));
    }
    g.head_[2 * e] = s.v;
    g.head_[2 * e + 1] = s.u;
    g.len_[2 * e] = s.len_uv;
    g.len_[2 * e + 1] = s.len_vu;
    g.cap_[2 * e] = s.cap_uv;
    g.cap_[2 * e + 1] = s.cap_vu;
  }
  g.rot_.assign(n, {});
  std::vector<int> used(2 * m, 0);
  for (int v = 0; v < n; ++v) {
    for (int d : rotation[v]) {
      if (d < 0 || d >= 2 * m || g.tail(d) != v || used[d])
        throw InvalidRotation("rotation of " + std::to_string(v) + " names dart " + std::to_string(d) +
                              " that is foreign or repeated");
      used[d] = 1;
      g.rot_[v].push_back(d);
    }
  }
  for (int d = 0; d < 2 * m; ++d)
    if (!used[d]) throw InvalidRotation("dart " + std::to_string(d) + " missing from rotation");
  g.rebuild_faces();
  // Euler: V - E + F = 1 + C over the vertices that carry edges.
  int v_used = 0;
  for (int v = 0; v < n; ++v) v_used += !g.rot_[v].empty();
  const int c = g.edge_components();
  if (m > 0 && v_used - m + g.num_faces() != 1 + c)
    throw NonPlanarEmbedding("V - E + F = " + std::to_string(v_used - m + g.num_faces()) +
                             " with " + std::to_string(c) + " component(s)");
  return g;
}

EmbeddedPlanarGraph build_graph(int n, const std::vector<EdgeSpec>& edges,
                                const std::vector<std::vector<int>>& rotation,
                                bool allow_multi) {
  if (static_cast<int>(rotation.size()) != n)
    throw InvalidRotation("rotation has " + std::to_string(rotation.size()) + " entries, expected " +
                          std::to_string(n));
  const int m = static_cast<int>(edges.size());
  std::vector<int> used(2 * m, 0);
  std::vector<std::vector<int>> darts(n);
  for (int v = 0; v < n; ++v) {
    for (int e : rotation[v]) {
      if (e < 0 || e >= m) throw InvalidRotation("rotation of " + std::to_string(v) + " names bad edge");
      int d = -1;
      if (edges[e].u == v && !used[2 * e])
        d = 2 * e;
      else if (edges[e].v == v && !used[2 * e + 1])
        d = 2 * e + 1;
      else
        throw InvalidRotation("edge " + std::to_string(e) + " listed twice or not incident to " +
                              std::to_string(v));
      used[d] = 1;
      darts[v].push_back(d);
    }
  }
  return build_graph_darts(n, edges, darts, allow_multi);
}

EmbeddedPlanarGraph dual_graph(const EmbeddedPlanarGraph& g) {
  EmbeddedPlanarGraph d;
  d.n_ = g.num_faces();
  const int m = g.num_darts();
  d.head_.resize(m);
  d.len_.resize(m);
  d.cap_.resize(m);
  for (int x = 0; x < m; ++x) {
    d.head_[x] = g.right_face(x);
    d.len_[x] = g.length(x);
    d.cap_[x] = g.capacity(x);
  }
  d.rot_.assign(d.n_, {});
  for (int f = 0; f < d.n_; ++f)
    for (int x : g.face_darts(f)) d.rot_[f].push_back(EmbeddedPlanarGraph::rev(x));
  d.rebuild_faces();
  return d;
}

DegreeReduction reduce_degree(const EmbeddedPlanarGraph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<EdgeSpec> edges(m);
  for (int e = 0; e < m; ++e) {
    edges[e] = {g.tail(2 * e), g.head(2 * e), g.length(2 * e), g.length(2 * e + 1),
                g.capacity(2 * e), g.capacity(2 * e + 1)};
  }
  std::vector<int> origin(n);
  std::iota(origin.begin(), origin.end(), 0);
  std::vector<std::vector<int>> rot(n);
  // owner[d] = vertex that takes over dart d once its tail is split.
  std::vector<int> owner(2 * m);
  for (int d = 0; d < 2 * m; ++d) owner[d] = g.tail(d);
  int next_id = n;
  for (int v = 0; v < n; ++v) {
    const auto& r = g.rotation(v);
    const int k = static_cast<int>(r.size());
    if (k <= 3) continue;
    // Path c_0 .. c_{k-3}: c_0 = v takes r[0], r[1]; the last takes the final
    // two darts; each middle vertex takes one. Contracting the path gives
    // back the original rotation.
    const int len = k - 2;
    std::vector<int> ids(len);
    ids[0] = v;
    for (int i = 1; i < len; ++i) {
      ids[i] = next_id++;
      origin.push_back(v);
      rot.emplace_back();
    }
    std::vector<int> link(len - 1);
    for (int i = 0; i + 1 < len; ++i) {
      link[i] = static_cast<int>(edges.size());
      edges.push_back({ids[i], ids[i + 1], 0, 0, 0, 0});
    }
    auto slot = [&](int i) { return i <= 1 ? 0 : std::min(i - 1, len - 1); };
    for (int i = 0; i < k; ++i) owner[r[i]] = ids[slot(i)];
    for (int j = 0; j < len; ++j) {
      auto& out = rot[ids[j]];
      out.clear();
      if (j > 0) out.push_back(2 * link[j - 1] + 1);
      for (int i = 0; i < k; ++i)
        if (slot(i) == j) out.push_back(r[i]);
      if (j + 1 < len) out.push_back(2 * link[j]);
    }
  }
  for (int e = 0; e < m; ++e) {
    edges[e].u = owner[2 * e];
    edges[e].v = owner[2 * e + 1];
  }
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) <= 3) {
      rot[v] = g.rotation(v);
    }
  }
  DegreeReduction out;
  out.graph = build_graph_darts(next_id, edges, rot, true);
  out.origin = std::move(origin);
  return out;
}

}  // namespace pgsp
