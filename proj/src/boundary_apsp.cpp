#include "pgsp/boundary_apsp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pgsp/dijkstra.hpp"

namespace pgsp {

std::vector<int> face_vertices(const EmbeddedPlanarGraph& g, int f) {
  if (f < 0 || f >= g.num_faces()) throw FaceNotFound("face " + std::to_string(f));
  std::vector<int> out;
  std::vector<char> seen(g.num_vertices(), 0);
  for (int d : g.face_darts(f)) {
    const int v = g.tail(d);
    if (!seen[v]) {
      seen[v] = 1;
      out.push_back(v);
    }
  }
  return out;
}

int apsp_region_size(int k, int n) {
  const long long lg = k <= 1 ? 0 : static_cast<long long>(std::ceil(std::log2(k)));
  long long r = static_cast<long long>(k) * k * lg * lg;
  r = std::min<long long>(r, std::max(4, n - 1));
  return static_cast<int>(std::max<long long>(4, r));
}

bool apsp_guard(int k, int n) {
  if (n < 4) return false;
  return k < std::sqrt(static_cast<double>(n)) / std::log2(static_cast<double>(n));
}

FaceApspResult face_boundary_apsp(const EmbeddedPlanarGraph& g, const FaceApspRequest& req) {
  const std::vector<int> on_face = face_vertices(g, req.face);
  FaceApspResult res;
  if (req.vertices.empty()) {
    res.vertices = on_face;
  } else {
    for (int v : req.vertices) {
      if (std::find(on_face.begin(), on_face.end(), v) == on_face.end())
        throw BadParams("vertex " + std::to_string(v) + " is not on face " + std::to_string(req.face));
      if (std::find(res.vertices.begin(), res.vertices.end(), v) != res.vertices.end())
        throw BadParams("vertex " + std::to_string(v) + " listed twice");
      res.vertices.push_back(v);
    }
  }
  const int k = static_cast<int>(res.vertices.size());
  const int n = g.num_vertices();
  res.fast = req.path == ApspPath::kFast || (req.path == ApspPath::kAuto && apsp_guard(k, n));
  res.dist.assign(k, std::vector<Weight>(k, kInf));

  if (!res.fast) {
    for (int i = 0; i < k; ++i) {
      const std::vector<Weight> d = dijkstra(g, res.vertices[i]);
      for (int j = 0; j < k; ++j) res.dist[i][j] = d[res.vertices[j]];
    }
    return res;
  }

  res.r = apsp_region_size(k, n);
  HkrsOptions opts;
  opts.r = res.r;
  opts.division.mandatory = res.vertices;
  opts.division.designated_face = req.face;
  HkrsEngine engine(g, opts);
  HkrsRunOptions ro;
  ro.backend = req.backend;
  for (int i = 0; i < k; ++i) {
    const HkrsResult run = engine.sssp(res.vertices[i], ro);
    for (int j = 0; j < k; ++j) res.dist[i][j] = run.dist[res.vertices[j]];
    res.counters.heap_ops += run.counters.heap_ops;
    res.counters.mh_ops += run.counters.mh_ops;
    res.counters.rmq_ops += run.counters.rmq_ops;
    res.counters.h0_procs += run.counters.h0_procs;
    res.counters.update_calls += run.counters.update_calls;
  }
  return res;
}

}  // namespace pgsp
