#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgsp/hkrs.hpp"
#include "pgsp/planar_graph.hpp"

namespace pgsp {

enum class Algo { kDijkstra, kFr, kFrFast, kHkrsFr };

// "dijkstra", "fr", "fr-fast", "hkrs-fr"; throws BadParams.
Algo parse_algo(const std::string& s);
std::string algo_name(Algo a);
// "cq1", "cq3"; throws BadParams.
Backend parse_backend(const std::string& s);

struct BenchRecord {
  std::string instance;
  int n = 0;
  int r = 0;
  std::string algo;
  std::optional<long long> time_ns;  // only set for verified runs
  long long heap_ops = 0;
  long long rmq_ops = 0;
  long long mh_ops = 0;
  long long h0_procs = 0;
  std::string verdict;  // "exact-match" or "mismatch(...)"

  bool ok() const { return verdict == "exact-match"; }
};

std::string csv_header();
std::string to_csv(const BenchRecord& rec);

struct SsspBenchOptions {
  int r = 16;
  Backend backend = Backend::kCq3;
  Algo algo = Algo::kHkrsFr;
  // Vertex ids of the input graph; empty means every boundary vertex.
  std::vector<int> sources;
};

// Divides g, builds the DDGs and runs `algo` from every source. Each run is
// compared with Dijkstra on g over all boundary vertices; wall time covers
// the runs only and is dropped on a mismatch.
BenchRecord bench_sssp(const std::string& instance, const EmbeddedPlanarGraph& g, const SsspBenchOptions& opts);

}  // namespace pgsp
