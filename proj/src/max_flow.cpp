#include "pgsp/max_flow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <string>

#include "pgsp/dijkstra.hpp"

namespace pgsp {

namespace {

void require_endpoints(const EmbeddedPlanarGraph& g, int s, int t) {
  const int n = g.num_vertices();
  if (s < 0 || s >= n || t < 0 || t >= n) throw BadParams("source or sink out of range");
  if (s == t) throw BadParams("source equals sink");
}

// Capacities with every infinite entry replaced by a value above the sum of
// the finite ones.
std::vector<Weight> finite_capacities(const EmbeddedPlanarGraph& g, Weight& big) {
  Weight total = 0;
  for (int d = 0; d < g.num_darts(); ++d) {
    const Weight c = g.capacity(d);
    if (c < 0) throw BadInput("negative capacity on dart " + std::to_string(d));
    if (c < kInf) total += c;
  }
  big = total + 1;
  std::vector<Weight> c(g.num_darts());
  for (int d = 0; d < g.num_darts(); ++d) c[d] = g.capacity(d) >= kInf ? big : g.capacity(d);
  return c;
}

bool connected_to(const EmbeddedPlanarGraph& g, int s, int t) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int d : g.rotation(v)) {
      const int w = g.head(d);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen[t] != 0;
}

FlowResult zero_flow(const EmbeddedPlanarGraph& g) {
  FlowResult res;
  res.flow.assign(g.num_darts(), 0);
  return res;
}

// Common start of both variants. Returns false when s and t are disconnected.
bool prepare(const FlowNetwork& net, EmbeddedPlanarGraph& g, EmbeddedPath& path, std::vector<Weight>& cap) {
  require_endpoints(net.graph, net.s, net.t);
  if (!connected_to(net.graph, net.s, net.t)) return false;
  if (net.graph.edge_components() != 1) throw BadParams("network must be connected");
  g = net.graph;
  Weight big = 0;
  cap = finite_capacities(g, big);
  path = embed_st_path(g, net.s, net.t, big);
  for (int d = static_cast<int>(cap.size()); d < g.num_darts(); ++d) cap.push_back(g.capacity(d));
  return true;
}

FlowResult finish(const FlowNetwork& net, const EmbeddedPlanarGraph& g, const std::vector<Weight>& pi) {
  FlowResult res;
  const int m = net.graph.num_darts();
  std::vector<Weight> f(m);
  for (int d = 0; d < m; ++d) f[d] = potential_flow(g, pi, d);
  res.flow = preflow_to_flow(net.graph, net.s, net.t, std::move(f));
  res.value = flow_value(net.graph, net.t, res.flow);
  return res;
}

// Bounds the flow the current path vertex may still push over return arc a
// to its excess. A Hassin circulation can route flow around cycles through
// the uncapped path arcs, so the flow already on a may exceed that excess.
// In that case the arc is set up for a correction step (return arc a^1) that
// pushes the surplus back, and false is returned.
bool bound_return_arc(std::vector<Weight>& cap, int a, Weight on_a, Weight excess_v) {
  if (on_a <= excess_v) {
    cap[a] = excess_v;
    cap[a ^ 1] = 0;
    return true;
  }
  cap[a] = on_a;
  cap[a ^ 1] = -excess_v;
  return false;
}

// Zero residual on both darts of the return arc; returns the flow on it.
Weight freeze_return_arc(std::vector<Weight>& cap, int a, Weight on_a) {
  cap[a] = on_a;
  cap[a ^ 1] = -on_a;
  return on_a;
}

}  // namespace

EmbeddedPath embed_st_path(EmbeddedPlanarGraph& g, int s, int t, Weight back_cap) {
  require_endpoints(g, s, t);
  const int n = g.num_vertices();
  const int nf = g.num_faces();
  // Nodes [0, n) are vertices, [n, n + nf) faces.
  std::vector<int> from(n + nf, -1);
  std::deque<int> bfs{s};
  from[s] = s;
  while (!bfs.empty() && from[t] < 0) {
    const int x = bfs.front();
    bfs.pop_front();
    auto visit = [&](int y) {
      if (from[y] < 0) {
        from[y] = x;
        bfs.push_back(y);
      }
    };
    if (x < n) {
      for (int d : g.rotation(x)) visit(n + g.face_of(d));
    } else {
      for (int d : g.face_darts(x - n)) visit(g.tail(d));
    }
  }
  if (from[t] < 0) throw BadParams("sink not reachable from source");

  EmbeddedPath path;
  std::vector<int> chain;
  for (int x = t; x != s; x = from[x]) chain.push_back(x);
  chain.push_back(s);
  std::reverse(chain.begin(), chain.end());
  for (std::size_t i = 0; i < chain.size(); i += 2) path.vertices.push_back(chain[i]);
  for (std::size_t i = 1; i < chain.size(); i += 2) path.faces.push_back(chain[i] - n);

  // Corner darts are picked before any insertion; each insertion only splits
  // its own face, so the later corners stay valid.
  std::vector<std::pair<int, int>> corners;
  for (std::size_t i = 0; i < path.faces.size(); ++i) {
    int du = -1, dv = -1;
    for (int d : g.face_darts(path.faces[i])) {
      if (du < 0 && g.head(d) == path.vertices[i]) du = d;
      if (dv < 0 && g.head(d) == path.vertices[i + 1]) dv = d;
    }
    corners.push_back({du, dv});
  }
  for (const auto& [du, dv] : corners) path.forward.push_back(g.insert_edge_in_face(du, dv, 0, 0, 0, back_cap));
  return path;
}

std::vector<Weight> hassin_potential(const EmbeddedPlanarGraph& g, const std::vector<Weight>& residual,
                                     int return_dart) {
  std::vector<Arc> arcs;
  arcs.reserve(g.num_darts());
  for (int d = 0; d < g.num_darts(); ++d) {
    if (residual[d] < 0) throw NegativeResidual("dart " + std::to_string(d));
    arcs.push_back({g.left_face(d), g.right_face(d), residual[d]});
  }
  return dijkstra_arcs(g.num_faces(), arcs, g.left_face(return_dart));
}

Weight potential_flow(const EmbeddedPlanarGraph& g, const std::vector<Weight>& pi, int d) {
  return pi[g.right_face(d)] - pi[g.left_face(d)];
}

FlowResult max_flow_basic(const FlowNetwork& net) {
  EmbeddedPlanarGraph g;
  EmbeddedPath path;
  std::vector<Weight> cap;
  if (!prepare(net, g, path, cap)) return zero_flow(net.graph);

  std::vector<Weight> pi(g.num_faces(), 0), residual(g.num_darts());
  auto hassin = [&](int ret) {
    for (int d = 0; d < g.num_darts(); ++d) residual[d] = cap[d] - potential_flow(g, pi, d);
    const std::vector<Weight> step = hassin_potential(g, residual, ret);
    for (std::size_t f = 0; f < pi.size(); ++f) {
      if (step[f] >= kInf) throw BadInput("dual graph is disconnected");
      pi[f] += step[f];
    }
  };
  FlowResult res;
  Weight excess_v = cap[path.forward[0] ^ 1];
  for (int i = 0; i < path.p(); ++i) {
    const int a = path.forward[i] ^ 1;
    if (!bound_return_arc(cap, a, potential_flow(g, pi, a), excess_v)) {
      hassin(a ^ 1);
      ++res.corrections;
      if (!bound_return_arc(cap, a, potential_flow(g, pi, a), excess_v))
        throw NegativeResidual("surplus on path arc " + std::to_string(i + 1) + " could not be returned");
    }
    hassin(a);
    excess_v = freeze_return_arc(cap, a, potential_flow(g, pi, a));
  }
  const int corrections = res.corrections;
  res = finish(net, g, pi);
  res.p = path.p();
  res.corrections = corrections;
  return res;
}

FlowResult max_flow_fast(const FlowNetwork& net, const FlowOptions& opts) {
  EmbeddedPlanarGraph g;
  EmbeddedPath path;
  std::vector<Weight> cap;
  if (!prepare(net, g, path, cap)) return zero_flow(net.graph);
  const int p = path.p();
  const double n = net.graph.num_vertices();
  if (opts.guard && (n < 4 || p >= std::sqrt(n) / std::pow(std::log2(n), 3))) {
    FlowResult res = max_flow_basic(net);
    res.p = p;
    return res;
  }

  // R*: the dual without the darts of P. Input edges keep their ids, so dual
  // dart d of the first m darts is the dual of input dart d.
  const int m = net.graph.num_darts();
  const int nf = g.num_faces();
  const EmbeddedPlanarGraph dual = dual_graph(g);
  std::vector<EdgeSpec> edges(m / 2);
  for (int e = 0; e < m / 2; ++e)
    edges[e] = {dual.tail(2 * e), dual.head(2 * e), cap[2 * e], cap[2 * e + 1], 0, 0};
  std::vector<std::vector<int>> rot(nf);
  for (int f = 0; f < nf; ++f)
    for (int d : dual.rotation(f))
      if (d < m) rot[f].push_back(d);
  const EmbeddedPlanarGraph rstar = build_graph_darts(nf, edges, rot, true);

  std::vector<int> x_star;
  for (int d : path.forward) {
    x_star.push_back(g.left_face(d));
    x_star.push_back(g.right_face(d));
  }
  std::sort(x_star.begin(), x_star.end());
  x_star.erase(std::unique(x_star.begin(), x_star.end()), x_star.end());
  const int k = static_cast<int>(x_star.size());
  std::vector<int> local(nf, -1);
  for (int i = 0; i < k; ++i) local[x_star[i]] = i;

  const long long lg = p <= 1 ? 0 : static_cast<long long>(std::ceil(std::log2(p)));
  long long r = static_cast<long long>(p) * p * lg * lg * lg * lg * lg * lg;
  r = std::max<long long>(4, std::min<long long>(r, nf - 1));
  HkrsOptions ho;
  ho.r = static_cast<int>(r);
  ho.division.mandatory = x_star;
  const HkrsEngine base(rstar, ho);
  const int nv = base.num_vertices();

  // Division of R* plus one region for the dual darts of P.
  RecursiveDivision div = base.division();
  const int pid = static_cast<int>(div.regions.size());
  {
    Region pr;
    pr.id = pid;
    pr.height = 1;
    pr.vertices = x_star;
    for (int v : x_star) pr.holes.push_back({v});
    pr.boundary = x_star;
    if (div.regions[div.root].height == 1) {
      Region top;
      top.id = pid + 1;
      top.height = 2;
      top.children = {div.root, pid};
      div.regions[div.root].parent = top.id;
      pr.parent = top.id;
      div.regions.push_back(pr);
      div.regions.push_back(top);
      div.root = top.id;
      div.at_height.push_back({top.id});
      const long long r1 = div.r_vector.back();
      div.r_vector.push_back(static_cast<int>(std::min<long long>(r1 * r1, 1LL << 30)));
    } else {
      pr.parent = div.root;
      div.regions[div.root].children.push_back(pid);
      div.regions.push_back(pr);
    }
    div.at_height[1].push_back(pid);
  }

  std::vector<Weight> pi(nv, 0);
  const auto& base_ddgs = base.index().ddgs();
  FlowResult res;
  auto hassin = [&](int source_face) {
    std::vector<DenseDistanceGraph> ddgs;
    ddgs.reserve(base_ddgs.size() + 1);
    for (const DenseDistanceGraph& b : base_ddgs) {
      DenseDistanceGraph d = b;
      for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y) {
          Weight& w = d.dist.at(x, y);
          if (w >= kInf) continue;
          w += pi[d.boundary[x]] - pi[d.boundary[y]];
          if (w < 0) throw NegativeResidual("reduced DDG entry below zero");
        }
      for (ExplicitArc& e : d.explicit_arcs) e.len = d.dist.at(e.from, e.to);
      ddgs.push_back(std::move(d));
    }

    // DDG of the path region: all pairs over its residual darts.
    std::vector<Arc> parcs;
    for (int fd : path.forward)
      for (int d : {fd, fd ^ 1}) {
        const Weight res_cap = cap[d] - potential_flow(g, pi, d);
        if (res_cap < 0) throw NegativeResidual("path dart " + std::to_string(d));
        parcs.push_back({local[g.left_face(d)], local[g.right_face(d)], res_cap});
      }
    DenseDistanceGraph pd;
    pd.region = pid;
    pd.boundary = x_star;
    pd.dist = DenseMatrix(k, k, kInf);
    for (int x = 0; x < k; ++x) {
      pd.hole_of.push_back(x);
      pd.holes.push_back({x, 1, false});
      const std::vector<Weight> dx = dijkstra_arcs(k, parcs, x);
      for (int y = 0; y < k; ++y) {
        pd.dist.at(x, y) = dx[y];
        if (x != y && dx[y] < kInf) pd.explicit_arcs.push_back({x, y, dx[y]});
      }
    }
    ddgs.push_back(std::move(pd));

    HkrsEngine engine(nv, div, std::move(ddgs));
    HkrsRunOptions ro;
    ro.backend = opts.backend;
    const HkrsResult run = engine.sssp(source_face, ro);
    for (int v = 0; v < nv; ++v) {
      if (!engine.index().is_boundary(v)) continue;
      if (run.dist[v] >= kInf) throw BadInput("dual DDG is disconnected");
      pi[v] += run.dist[v];
    }
    res.counters.heap_ops += run.counters.heap_ops;
    res.counters.mh_ops += run.counters.mh_ops;
    res.counters.rmq_ops += run.counters.rmq_ops;
    res.counters.h0_procs += run.counters.h0_procs;
    res.counters.update_calls += run.counters.update_calls;
  };
  auto on = [&](int d) { return potential_flow(g, pi, d); };

  Weight excess_v = cap[path.forward[0] ^ 1];
  for (int i = 0; i < p; ++i) {
    const int a = path.forward[i] ^ 1;
    if (!bound_return_arc(cap, a, on(a), excess_v)) {
      hassin(g.left_face(a ^ 1));
      ++res.corrections;
      if (!bound_return_arc(cap, a, on(a), excess_v))
        throw NegativeResidual("surplus on path arc " + std::to_string(i + 1) + " could not be returned");
    }
    hassin(g.left_face(a));
    excess_v = freeze_return_arc(cap, a, on(a));
  }

  // Potential of every face: distances in R* under the input capacities,
  // started from the path faces at their computed values.
  std::vector<Arc> arcs;
  arcs.reserve(m + k);
  for (int d = 0; d < m; ++d) arcs.push_back({rstar.tail(d), rstar.head(d), cap[d]});
  for (int x : x_star) arcs.push_back({nf, x, pi[x]});
  std::vector<Weight> full = dijkstra_arcs(nf + 1, arcs, nf);
  full.pop_back();

  const SsspCounters counters = res.counters;
  const int corrections = res.corrections;
  res = finish(net, g, full);
  res.counters = counters;
  res.corrections = corrections;
  res.p = p;
  res.r = static_cast<int>(r);
  res.fast = true;
  return res;
}

std::vector<Weight> excess(const EmbeddedPlanarGraph& g, const std::vector<Weight>& flow) {
  std::vector<Weight> ex(g.num_vertices(), 0);
  for (int d = 0; d < g.num_darts(); ++d) ex[g.head(d)] += flow[d];
  return ex;
}

int cancel_flow_cycles(const EmbeddedPlanarGraph& g, std::vector<Weight>& flow) {
  const int n = g.num_vertices();
  std::vector<char> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> pos(n, 0);     // next rotation index to scan
  std::vector<int> stack_v, stack_d;  // stack_d[i]: dart stack_v[i] -> stack_v[i + 1]
  int cancelled = 0;
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    stack_v.assign(1, root);
    stack_d.clear();
    state[root] = 1;
    pos[root] = 0;
    while (!stack_v.empty()) {
      const int u = stack_v.back();
      const auto& rot = g.rotation(u);
      if (pos[u] == static_cast<int>(rot.size())) {
        state[u] = 2;
        stack_v.pop_back();
        if (!stack_d.empty()) stack_d.pop_back();
        continue;
      }
      const int d = rot[pos[u]];
      const int w = g.head(d);
      if (flow[d] <= 0 || state[w] == 2) {
        ++pos[u];
        continue;
      }
      if (state[w] == 0) {
        state[w] = 1;
        pos[w] = 0;
        stack_v.push_back(w);
        stack_d.push_back(d);
        continue;
      }
      // Cycle: w ... u on the stack, closed by d.
      const int at = static_cast<int>(std::find(stack_v.begin(), stack_v.end(), w) - stack_v.begin());
      Weight delta = flow[d];
      for (int j = at; j < static_cast<int>(stack_d.size()); ++j) delta = std::min(delta, flow[stack_d[j]]);
      auto push_back_flow = [&](int x) {
        flow[x] -= delta;
        flow[x ^ 1] += delta;
      };
      push_back_flow(d);
      for (int j = at; j < static_cast<int>(stack_d.size()); ++j) push_back_flow(stack_d[j]);
      ++cancelled;
      // Unwind to the tail of the first arc that became empty.
      int cut = static_cast<int>(stack_d.size());
      for (int j = at; j < static_cast<int>(stack_d.size()); ++j)
        if (flow[stack_d[j]] == 0) {
          cut = j;
          break;
        }
      while (static_cast<int>(stack_d.size()) > cut) {
        state[stack_v.back()] = 0;
        stack_v.pop_back();
        stack_d.pop_back();
      }
    }
  }
  return cancelled;
}

std::vector<Weight> preflow_to_flow(const EmbeddedPlanarGraph& g, int s, int t, std::vector<Weight> flow) {
  const int n = g.num_vertices();
  std::vector<Weight> ex = excess(g, flow);
  for (int v = 0; v < n; ++v)
    if (v != s && ex[v] < 0) throw BadInput("vertex " + std::to_string(v) + " has a deficit");
  cancel_flow_cycles(g, flow);

  // Topological order of the positive-flow arcs.
  std::vector<int> indeg(n, 0), order;
  for (int d = 0; d < g.num_darts(); ++d)
    if (flow[d] > 0) ++indeg[g.head(d)];
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int d : g.rotation(order[i]))
      if (flow[d] > 0 && --indeg[g.head(d)] == 0) order.push_back(g.head(d));
  if (static_cast<int>(order.size()) != n) throw CyclicAfterCancellation("positive-flow cycle left");

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (v == s || v == t) continue;
    Weight e = ex[v];
    for (int out : g.rotation(v)) {
      if (e == 0) break;
      const int d = out ^ 1;  // into v
      if (flow[d] <= 0) continue;
      const Weight delta = std::min(e, flow[d]);
      flow[d] -= delta;
      flow[out] += delta;
      e -= delta;
      ex[g.tail(d)] += delta;
    }
    ex[v] = e;
    if (e != 0) throw BadInput("excess at vertex " + std::to_string(v) + " could not be returned");
  }
  return flow;
}

Weight max_flow_bfs(const EmbeddedPlanarGraph& g, int s, int t, std::vector<Weight>* flow_out) {
  require_endpoints(g, s, t);
  const int n = g.num_vertices();
  std::vector<Weight> f(g.num_darts(), 0);
  auto residual = [&](int d) { return g.capacity(d) >= kInf ? kInf : g.capacity(d) - f[d]; };
  std::vector<int> via(n);
  Weight value = 0;
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    via[s] = -2;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && via[t] == -1) {
      const int u = q.front();
      q.pop();
      for (int d : g.rotation(u)) {
        const int w = g.head(d);
        if (via[w] == -1 && residual(d) > 0) {
          via[w] = d;
          q.push(w);
        }
      }
    }
    if (via[t] == -1) break;
    Weight b = kInf;
    for (int v = t; v != s; v = g.tail(via[v])) b = std::min(b, residual(via[v]));
    if (b >= kInf) throw BadParams("unbounded flow");
    for (int v = t; v != s; v = g.tail(via[v])) {
      f[via[v]] += b;
      f[via[v] ^ 1] -= b;
    }
    value += b;
  }
  if (flow_out) *flow_out = std::move(f);
  return value;
}

std::string check_flow(const EmbeddedPlanarGraph& g, int s, int t, const std::vector<Weight>& flow) {
  if (static_cast<int>(flow.size()) != g.num_darts()) return "flow has wrong size";
  for (int d = 0; d < g.num_darts(); ++d) {
    if (flow[d] != -flow[d ^ 1]) return "antisymmetry fails on dart " + std::to_string(d);
    if (g.capacity(d) < kInf && flow[d] > g.capacity(d)) return "capacity exceeded on dart " + std::to_string(d);
  }
  const std::vector<Weight> ex = excess(g, flow);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != s && v != t && ex[v] != 0) return "conservation fails at vertex " + std::to_string(v);
  return {};
}

Weight residual_cut_capacity(const EmbeddedPlanarGraph& g, int s, int t, const std::vector<Weight>& flow) {
  std::vector<char> in(g.num_vertices(), 0);
  std::vector<int> stack{s};
  in[s] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int d : g.rotation(u)) {
      const int w = g.head(d);
      if (!in[w] && (g.capacity(d) >= kInf || g.capacity(d) - flow[d] > 0)) {
        in[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (in[t]) return kInf;
  Weight c = 0;
  for (int d = 0; d < g.num_darts(); ++d)
    if (in[g.tail(d)] && !in[g.head(d)]) c = sat_add(c, g.capacity(d));
  return c;
}

Weight flow_value(const EmbeddedPlanarGraph& g, int t, const std::vector<Weight>& flow) { return excess(g, flow)[t]; }

}  // namespace pgsp
