#include "doctest.h"
#include "pgsp/ddg.hpp"
#include "pgsp/dijkstra.hpp"
#include "pgsp/division.hpp"
#include "pgsp/fr_dijkstra.hpp"
#include "test_util.hpp"

using namespace pgsp;
using namespace pgsp::testing;

namespace {

Region edge_region(int id, int e, int u, int v) {
  Region r;
  r.id = id;
  r.edges = {e};
  r.vertices = {std::min(u, v), std::max(u, v)};
  r.holes = {{std::min(u, v), std::max(u, v)}};
  r.boundary = r.holes[0];
  return r;
}

}  // namespace

TEST_SUITE("fr_dijkstra") {
  TEST_CASE("one region with two boundary vertices") {
    const auto g = build_graph(2, {{0, 1, 4, 9}}, {{0}, {0}});
    DdgIndex idx({build_ddg(g, edge_region(0, 0, 0, 1))}, 2);
    for (auto run : {fr_dijkstra, fr_dijkstra_single_copy, ddg_dijkstra}) {
      CHECK(run(idx, 0).dist == std::vector<Weight>{0, 4});
      CHECK(run(idx, 1).dist == std::vector<Weight>{9, 0});
    }
  }

  TEST_CASE("unreachable boundary vertex keeps the sentinel") {
    const auto g = build_graph(3, {{0, 1, 2, 2}, {1, 2, kInf, 3}}, {{0}, {0, 1}, {1}});
    DdgIndex idx({build_ddg(g, edge_region(0, 0, 0, 1)), build_ddg(g, edge_region(1, 1, 1, 2))}, 3);
    for (auto run : {fr_dijkstra, fr_dijkstra_single_copy}) {
      const auto r = run(idx, 0);
      CHECK(r.dist[1] == 2);
      CHECK(r.dist[2] == kInf);
      CHECK(run(idx, 2).dist[0] == 5);
    }
  }

  TEST_CASE("non-boundary source is rejected") {
    const auto g = reduce_degree(grid(8, 8, 1)).graph;
    const auto div = recursive_division(g, 16);
    DdgIndex idx(build_ddgs(g, div), g.num_vertices());
    int inner = -1;
    for (int v = 0; v < g.num_vertices() && inner < 0; ++v)
      if (!idx.is_boundary(v)) inner = v;
    REQUIRE(inner >= 0);
    CHECK_THROWS_AS(fr_dijkstra(idx, inner), SourceNotBoundary);
    CHECK_THROWS_AS(fr_dijkstra_single_copy(idx, inner), SourceNotBoundary);
    CHECK_THROWS_AS(fr_dijkstra(idx, -1), SourceNotBoundary);
  }

  TEST_CASE("every boundary source on a 16x16 grid") {
    const auto g = reduce_degree(grid(16, 16, 5)).graph;
    const auto div = recursive_division(g, 16);
    DdgIndex idx(build_ddgs(g, div), g.num_vertices());
    FrDijkstra fr(idx);
    SingleCopyDijkstra sc(idx);
    const auto bv = idx.boundary_vertices();
    REQUIRE(bv.size() > 10);
    for (int s : bv) {
      const auto want = dijkstra(g, s);
      const auto a = fr.run(s), b = sc.run(s), c = ddg_dijkstra(idx, s);
      for (int v : bv) {
        REQUIRE(a.dist[v] == want[v]);
        REQUIRE(b.dist[v] == want[v]);
        REQUIRE(c.dist[v] == want[v]);
      }
      CHECK(a.counters.extractions == static_cast<long long>(bv.size()));
    }
  }

  TEST_CASE("multi-hole and triangulated families") {
    for (const char* kind : {"annulus-grid", "delaunay-like"}) {
      const auto g = reduce_degree(family(kind, 14, 6)).graph;
      const auto div = recursive_division(g, 16);
      DdgIndex idx(build_ddgs(g, div), g.num_vertices());
      FrDijkstra fr(idx);
      SingleCopyDijkstra sc(idx);
      for (int s : idx.boundary_vertices()) {
        const auto want = dijkstra(g, s);
        const auto a = fr.run(s), b = sc.run(s);
        for (int v : idx.boundary_vertices()) {
          REQUIRE(a.dist[v] == want[v]);
          REQUIRE(b.dist[v] == want[v]);
        }
      }
    }
  }

  TEST_CASE("Monge-heap operation counts across grid sizes") {
    long long prev = 0;
    for (int w : {16, 32, 64}) {
      const auto g = reduce_degree(grid(w, w, 1)).graph;
      const auto div = recursive_division(g, 16);
      DdgIndex idx(build_ddgs(g, div), g.num_vertices());
      const int s = idx.boundary_vertices().front();
      const auto r = fr_dijkstra_single_copy(idx, s);
      MESSAGE("n = " << w * w << " mh_ops = " << r.counters.mh_ops
                     << (prev ? " ratio = " + std::to_string(double(r.counters.mh_ops) / prev) : std::string()));
      CHECK(r.counters.mh_ops > prev);
      prev = r.counters.mh_ops;
    }
  }
}
