#pragma once

#include <algorithm>
#include <vector>

#include "pgsp/generators.hpp"
#include "pgsp/monge.hpp"
#include "pgsp/monge_rmq.hpp"
#include "pgsp/planar_graph.hpp"

namespace pgsp::testing {

// u_i + v_j + P_ij where P is a 2D prefix sum of non-negative increments,
// which satisfies the Monge inequality of monge.hpp.
inline DenseMatrix random_monge(Rng& rng, int m, int n, Weight spread = 50) {
  DenseMatrix d(m, n);
  std::vector<Weight> u(m), v(n);
  for (auto& x : u) x = rng.uniform(-spread, spread);
  for (auto& x : v) x = rng.uniform(-spread, spread);
  std::vector<std::vector<Weight>> p(m + 1, std::vector<Weight>(n + 1, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const Weight inc = rng.uniform(0, 3) == 0 ? rng.uniform(0, 5) : 0;
      p[i + 1][j + 1] = p[i][j + 1] + p[i + 1][j] - p[i][j] + inc;
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) d.at(i, j) = u[i] + v[j] + p[i][j];
  return d;
}

// Minimum over active columns of [a, b] in row i, lowest column on ties.
template <class Active>
RmqAnswer brute_rmq(const MongeView& m, int i, int a, int b, Active active) {
  RmqAnswer best;
  for (int c = a; c <= b; ++c)
    if (active(c) && m(i, c) < best.value) best = {m(i, c), c};
  return best;
}

inline EmbeddedPlanarGraph grid(int w, int h, std::uint64_t seed, Weight max_len = 100, Weight max_cap = 0) {
  GenParams p;
  p.width = w;
  p.height = h;
  p.max_len = max_len;
  p.max_cap = max_cap;
  return make_grid(p, seed);
}

inline EmbeddedPlanarGraph family(const std::string& kind, int w, std::uint64_t seed, Weight max_cap = 0) {
  GenParams p;
  p.width = w;
  p.height = w;
  p.max_cap = max_cap;
  return generate(kind, p, seed);
}

// Cycle 0 - 1 - ... - (k-1) - 0 with lengths len_fwd / len_bwd.
inline EmbeddedPlanarGraph cycle(int k, Weight len_fwd, Weight len_bwd) {
  std::vector<EdgeSpec> edges;
  std::vector<std::vector<int>> rot(k);
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, (i + 1) % k, len_fwd, len_bwd, 0, 0});
    rot[i].push_back(i);
    rot[(i + 1) % k].push_back(i);
  }
  return build_graph(k, edges, rot);
}

}  // namespace pgsp::testing
