#include "pgsp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pgsp {

namespace {

struct Builder {
  std::vector<EdgeSpec> edges;
  std::vector<std::vector<int>> nbr_edges;  // unsorted incidences
  std::vector<double> px, py;

  explicit Builder(int n) : nbr_edges(n), px(n), py(n) {}

  void add(int u, int v, Rng& rng, const GenParams& p, Weight base = 0) {
    EdgeSpec e;
    e.u = u;
    e.v = v;
    e.len_uv = base + rng.uniform(0, p.max_len);
    e.len_vu = base + rng.uniform(0, p.max_len);
    if (p.max_cap > 0) {
      e.cap_uv = rng.uniform(0, p.max_cap);
      e.cap_vu = rng.uniform(0, p.max_cap);
    }
    nbr_edges[u].push_back(static_cast<int>(edges.size()));
    nbr_edges[v].push_back(static_cast<int>(edges.size()));
    edges.push_back(e);
  }

  // Sorts each incidence list by angle (CCW from the positive x axis).
  EmbeddedPlanarGraph finish() {
    const int n = static_cast<int>(nbr_edges.size());
    for (int v = 0; v < n; ++v) {
      auto angle = [&](int e) {
        const int w = edges[e].u == v ? edges[e].v : edges[e].u;
        return std::atan2(py[w] - py[v], px[w] - px[v]);
      };
      std::sort(nbr_edges[v].begin(), nbr_edges[v].end(),
                [&](int a, int b) { return angle(a) < angle(b); });
    }
    return build_graph(n, edges, nbr_edges);
  }
};

void check_dims(const GenParams& p, int min_side) {
  if (p.width < min_side || p.height < min_side || p.max_len < 0 || p.max_cap < 0)
    throw BadParams("dimensions must be >= " + std::to_string(min_side) + " and bounds non-negative");
}

}  // namespace

EmbeddedPlanarGraph make_grid(const GenParams& p, std::uint64_t seed) {
  check_dims(p, 1);
  Rng rng(seed);
  const int w = p.width, h = p.height;
  Builder b(w * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      b.px[y * w + x] = x;
      b.py[y * w + x] = y;
    }
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) b.add(y * w + x, y * w + x + 1, rng, p);
      if (y + 1 < h) b.add(y * w + x, (y + 1) * w + x, rng, p);
    }
  return b.finish();
}

EmbeddedPlanarGraph make_annulus_grid(const GenParams& p, std::uint64_t seed) {
  check_dims(p, 5);
  Rng rng(seed);
  const int w = p.width, h = p.height;
  const int x0 = w / 3, x1 = w - w / 3, y0 = h / 3, y1 = h - h / 3;
  auto removed = [&](int x, int y) { return x >= x0 && x < x1 && y >= y0 && y < y1; };
  std::vector<int> id(w * h, -1);
  int n = 0;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (!removed(x, y)) id[y * w + x] = n++;
  Builder b(n);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (id[y * w + x] >= 0) {
        b.px[id[y * w + x]] = x;
        b.py[id[y * w + x]] = y;
      }
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const int v = id[y * w + x];
      if (v < 0) continue;
      if (x + 1 < w && id[y * w + x + 1] >= 0) b.add(v, id[y * w + x + 1], rng, p);
      if (y + 1 < h && id[(y + 1) * w + x] >= 0) b.add(v, id[(y + 1) * w + x], rng, p);
    }
  return b.finish();
}

EmbeddedPlanarGraph make_delaunay_like(const GenParams& p, std::uint64_t seed) {
  check_dims(p, 2);
  Rng rng(seed);
  const int w = p.width, h = p.height;
  Builder b(w * h);
  // Integer jitter of at most 0.2 cell keeps every cell convex.
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      b.px[y * w + x] = x * 1000 + rng.uniform(-200, 200);
      b.py[y * w + x] = y * 1000 + rng.uniform(-200, 200);
    }
  auto euclid = [&](int u, int v) {
    return static_cast<Weight>(std::lround(std::hypot(b.px[u] - b.px[v], b.py[u] - b.py[v]) / 10.0));
  };
  GenParams noise = p;
  noise.max_len = std::max<Weight>(p.max_len / 5, 0);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const int v = y * w + x;
      if (x + 1 < w) b.add(v, v + 1, rng, noise, euclid(v, v + 1));
      if (y + 1 < h) b.add(v, v + w, rng, noise, euclid(v, v + w));
      if (x + 1 < w && y + 1 < h) {
        if (rng.coin())
          b.add(v, v + w + 1, rng, noise, euclid(v, v + w + 1));
        else
          b.add(v + 1, v + w, rng, noise, euclid(v + 1, v + w));
      }
    }
  return b.finish();
}

EmbeddedPlanarGraph generate(const std::string& kind, const GenParams& p, std::uint64_t seed) {
  if (kind == "grid") return make_grid(p, seed);
  if (kind == "annulus-grid") return make_annulus_grid(p, seed);
  if (kind == "delaunay-like") return make_delaunay_like(p, seed);
  throw BadParams("unknown generator kind '" + kind + "'");
}

}  // namespace pgsp
