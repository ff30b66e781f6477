#include "pgsp/bench.hpp"

#include <chrono>
#include <sstream>

#include "pgsp/dijkstra.hpp"
#include "pgsp/fr_dijkstra.hpp"

namespace pgsp {

Algo parse_algo(const std::string& s) {
  if (s == "dijkstra") return Algo::kDijkstra;
  if (s == "fr") return Algo::kFr;
  if (s == "fr-fast") return Algo::kFrFast;
  if (s == "hkrs-fr") return Algo::kHkrsFr;
  throw BadParams("unknown algorithm " + s);
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::kDijkstra: return "dijkstra";
    case Algo::kFr: return "fr";
    case Algo::kFrFast: return "fr-fast";
    case Algo::kHkrsFr: return "hkrs-fr";
  }
  return "?";
}

Backend parse_backend(const std::string& s) {
  if (s == "cq1") return Backend::kCq1;
  if (s == "cq3") return Backend::kCq3;
  throw BadParams("unknown backend " + s);
}

std::string csv_header() { return "instance,n,r,algo,time_ns,heap_ops,rmq_ops,mh_ops,h0_procs,verdict"; }

std::string to_csv(const BenchRecord& rec) {
  std::ostringstream out;
  out << rec.instance << ',' << rec.n << ',' << rec.r << ',' << rec.algo << ',';
  if (rec.time_ns) out << *rec.time_ns;
  out << ',' << rec.heap_ops << ',' << rec.rmq_ops << ',' << rec.mh_ops << ',' << rec.h0_procs << ','
      << rec.verdict;
  return out.str();
}

BenchRecord bench_sssp(const std::string& instance, const EmbeddedPlanarGraph& g, const SsspBenchOptions& opts) {
  BenchRecord rec;
  rec.instance = instance;
  rec.n = g.num_vertices();
  rec.r = opts.r;
  rec.algo = algo_name(opts.algo);
  if (opts.algo == Algo::kHkrsFr) rec.algo += opts.backend == Backend::kCq1 ? "/cq1" : "/cq3";

  HkrsOptions ho;
  ho.r = opts.r;
  HkrsEngine engine(g, ho);
  const DdgIndex& index = engine.index();
  const EmbeddedPlanarGraph& split = engine.graph();
  std::vector<int> sources = opts.sources;
  if (sources.empty()) sources = engine.boundary_vertices();

  FrDijkstra fr(index);
  SingleCopyDijkstra single(index);
  HkrsRunOptions ro;
  ro.backend = opts.backend;

  using Clock = std::chrono::steady_clock;
  long long ns = 0;
  std::string bad;
  for (int s : sources) {
    if (s < 0 || s >= split.num_vertices() || !index.is_boundary(s))
      throw SourceNotBoundary("vertex " + std::to_string(s));
    SsspResult res;
    const auto t0 = Clock::now();
    switch (opts.algo) {
      case Algo::kDijkstra: res.dist = dijkstra(split, s); break;
      case Algo::kFr: res = fr.run(s); break;
      case Algo::kFrFast: res = single.run(s); break;
      case Algo::kHkrsFr: res = engine.sssp(s, ro); break;
    }
    ns += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
    rec.heap_ops += res.counters.heap_ops;
    rec.rmq_ops += res.counters.rmq_ops;
    rec.mh_ops += res.counters.mh_ops;
    rec.h0_procs += res.counters.h0_procs;

    if (!bad.empty()) continue;
    const std::vector<Weight> want = dijkstra(split, s);
    for (int v = 0; v < split.num_vertices() && bad.empty(); ++v)
      if (index.is_boundary(v) && res.dist[v] != want[v])
        bad = "mismatch(source " + std::to_string(s) + " vertex " + std::to_string(v) + ")";
  }
  rec.verdict = bad.empty() ? "exact-match" : bad;
  if (bad.empty()) rec.time_ns = ns;
  return rec;
}

}  // namespace pgsp
