#include "pgsp/dijkstra.hpp"

#include <functional>
#include <queue>
#include <string>
#include <utility>

namespace pgsp {

namespace {

using Item = std::pair<Weight, int>;
using MinQueue = std::priority_queue<Item, std::vector<Item>, std::greater<Item>>;

}  // namespace

std::vector<Weight> dijkstra(const EmbeddedPlanarGraph& g, int s) {
  const int n = g.num_vertices();
  if (s < 0 || s >= n) throw BadInput("source " + std::to_string(s) + " out of range");
  for (int d = 0; d < g.num_darts(); ++d)
    if (g.length(d) < 0) throw NegativeLength("dart " + std::to_string(d));
  std::vector<Weight> dist(n, kInf);
  MinQueue q;
  dist[s] = 0;
  q.push({0, s});
  while (!q.empty()) {
    auto [dv, v] = q.top();
    q.pop();
    if (dv != dist[v]) continue;
    for (int d : g.rotation(v)) {
      const Weight nd = sat_add(dv, g.length(d));
      const int w = g.head(d);
      if (nd < dist[w]) {
        dist[w] = nd;
        q.push({nd, w});
      }
    }
  }
  return dist;
}

std::vector<Weight> bellman_ford(const EmbeddedPlanarGraph& g, int s) {
  const int n = g.num_vertices();
  std::vector<Weight> dist(n, kInf);
  dist[s] = 0;
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (int d = 0; d < g.num_darts(); ++d) {
      const int u = g.tail(d);
      if (dist[u] >= kInf) continue;
      const Weight nd = sat_add(dist[u], g.length(d));
      if (nd < dist[g.head(d)]) {
        dist[g.head(d)] = nd;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

std::vector<Weight> dijkstra_arcs(int n, const std::vector<Arc>& arcs, int s) {
  std::vector<int> start(n + 1, 0);
  for (const auto& a : arcs) ++start[a.from + 1];
  for (int i = 0; i < n; ++i) start[i + 1] += start[i];
  std::vector<int> order(arcs.size());
  {
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) order[fill[arcs[i].from]++] = i;
  }
  std::vector<Weight> dist(n, kInf);
  MinQueue q;
  dist[s] = 0;
  q.push({0, s});
  while (!q.empty()) {
    auto [dv, v] = q.top();
    q.pop();
    if (dv != dist[v]) continue;
    for (int k = start[v]; k < start[v + 1]; ++k) {
      const Arc& a = arcs[order[k]];
      const Weight nd = sat_add(dv, a.len);
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        q.push({nd, a.to});
      }
    }
  }
  return dist;
}

}  // namespace pgsp
