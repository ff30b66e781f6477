#include <sstream>

#include "doctest.h"
#include "pgsp/bench.hpp"
#include "pgsp/graph_io.hpp"
#include "test_util.hpp"

using namespace pgsp;
using namespace pgsp::testing;

TEST_SUITE("cli_bench") {
  TEST_CASE("generators") {
    const auto g = grid(2, 2, 1);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(grid(7, 3, 1).num_vertices() == 21);
    CHECK_THROWS_AS(generate("torus", GenParams{}, 1), BadParams);
    GenParams bad;
    bad.width = 0;
    CHECK_THROWS_AS(make_grid(bad, 1), BadParams);
  }

  TEST_CASE("same seed gives identical files") {
    for (const char* kind : {"grid", "annulus-grid", "delaunay-like"}) {
      std::ostringstream a, b, c;
      write_graph(a, family(kind, 9, 42, 7), true);
      write_graph(b, family(kind, 9, 42, 7), true);
      write_graph(c, family(kind, 9, 43, 7), true);
      CHECK(a.str() == b.str());
      CHECK(a.str() != c.str());
    }
  }

  TEST_CASE("names round trip") {
    for (Algo a : {Algo::kDijkstra, Algo::kFr, Algo::kFrFast, Algo::kHkrsFr}) CHECK(parse_algo(algo_name(a)) == a);
    CHECK(parse_backend("cq1") == Backend::kCq1);
    CHECK(parse_backend("cq3") == Backend::kCq3);
    CHECK_THROWS_AS(parse_algo("astar"), BadParams);
    CHECK_THROWS_AS(parse_backend("cq2"), BadParams);
  }

  TEST_CASE("CSV schema") {
    CHECK(csv_header() == "instance,n,r,algo,time_ns,heap_ops,rmq_ops,mh_ops,h0_procs,verdict");
    BenchRecord r;
    r.instance = "x";
    r.n = 4;
    r.r = 16;
    r.algo = "fr";
    r.verdict = "mismatch(source 1 vertex 2)";
    CHECK(to_csv(r) == "x,4,16,fr,,0,0,0,0,mismatch(source 1 vertex 2)");
    CHECK_FALSE(r.ok());
    r.time_ns = 12;
    r.verdict = "exact-match";
    CHECK(to_csv(r) == "x,4,16,fr,12,0,0,0,0,exact-match");
  }

  TEST_CASE("every algorithm verifies on a grid") {
    const auto g = grid(16, 16, 1);
    for (Algo a : {Algo::kDijkstra, Algo::kFr, Algo::kFrFast, Algo::kHkrsFr}) {
      SsspBenchOptions o;
      o.algo = a;
      const auto rec = bench_sssp("grid", g, o);
      CHECK(rec.ok());
      CHECK(rec.time_ns.has_value());
      CHECK(rec.n == 256);
      CHECK(rec.heap_ops >= 0);
      if (a == Algo::kHkrsFr) CHECK(rec.h0_procs > 0);
    }
    SsspBenchOptions o;
    o.sources = {-5};
    CHECK_THROWS_AS(bench_sssp("grid", g, o), SourceNotBoundary);
  }
}
