#include "doctest.h"
#include "pgsp/ddg.hpp"
#include "pgsp/dijkstra.hpp"
#include "pgsp/hkrs.hpp"
#include "test_util.hpp"

using namespace pgsp;
using namespace pgsp::testing;

namespace {

void check_all_sources(HkrsEngine& e, bool with_fr) {
  const auto bv = e.boundary_vertices();
  FrDijkstra fr(e.index());
  for (int s : bv) {
    const auto want = dijkstra(e.graph(), s);
    HkrsRunOptions ro;
    const auto a = e.sssp(s, ro);
    ro.backend = Backend::kCq1;
    const auto b = e.sssp(s, ro);
    const SsspResult c = with_fr ? fr.run(s) : static_cast<const SsspResult&>(a);
    for (int v : bv) {
      REQUIRE(a.dist[v] == want[v]);
      REQUIRE(b.dist[v] == want[v]);
      REQUIRE(c.dist[v] == want[v]);
    }
  }
}

}  // namespace

TEST_SUITE("hkrs") {
  TEST_CASE("small graph is a single height-1 region") {
    HkrsOptions o;
    o.division.mandatory = {0, 8};
    HkrsEngine e(grid(3, 3, 2), o);
    CHECK(e.division().num_heights() == 1);
    CHECK(e.boundary_vertices() == std::vector<int>{0, 8});
    CHECK(e.num_h0_regions() == e.num_copies() + e.num_hyperarcs() + e.index().num_explicit());
    CHECK(e.sssp(0).dist[8] == dijkstra(e.graph(), 0)[8]);
  }

  TEST_CASE("height-0 items mirror the Monge heaps") {
    HkrsEngine e(grid(16, 16, 3));
    long long rows = 0, cols = 0, as_row = 0;
    for (const HeapSpec& hs : e.index().heaps()) {
      rows += static_cast<long long>(hs.row_vertex.size());
      cols += static_cast<long long>(hs.col_vertex.size());
    }
    for (int v = 0; v < e.num_vertices(); ++v) as_row += static_cast<long long>(e.index().as_row(v).size());
    CHECK(e.num_copies() == cols);
    CHECK(e.num_hyperarcs() == rows);
    CHECK(as_row == rows);
    CHECK(e.num_h0_regions() == cols + rows + e.index().num_explicit());
    for (int a : e.alpha()) CHECK(a >= 1);
  }

  TEST_CASE("every boundary source on a 24x24 grid") {
    HkrsEngine e(grid(24, 24, 4));
    check_all_sources(e, true);
  }

  TEST_CASE("annulus grid with several holes per region") {
    HkrsEngine e(family("annulus-grid", 20, 5));
    check_all_sources(e, false);
  }

  TEST_CASE("larger r and triangulations") {
    HkrsOptions o;
    o.r = 64;
    HkrsEngine e(family("delaunay-like", 20, 6), o);
    check_all_sources(e, false);
  }

  TEST_CASE("source without outgoing arcs reaches nothing") {
    auto g = grid(6, 6, 7);
    for (int d : g.rotation(0)) g.set_length(d, kInf);
    HkrsOptions o;
    o.division.mandatory = {0};
    HkrsEngine e(g, o);
    const auto r = e.sssp(0);
    for (int v : e.boundary_vertices())
      if (v != 0) CHECK(r.dist[v] == kInf);
    CHECK(r.dist[0] == 0);
  }

  TEST_CASE("non-boundary source is rejected") {
    HkrsEngine e(grid(10, 10, 1));
    int inner = -1;
    for (int v = 0; v < e.num_vertices() && inner < 0; ++v)
      if (!e.index().is_boundary(v)) inner = v;
    REQUIRE(inner >= 0);
    CHECK_THROWS_AS(e.sssp(inner), SourceNotBoundary);
  }

  TEST_CASE("trace matches the explicit reference and invariants hold") {
    HkrsEngine e(grid(12, 12, 8));
    for (int s : e.boundary_vertices()) {
      HkrsRunOptions ro;
      ro.trace = true;
      ro.check_invariants = true;
      const auto a = e.sssp(s, ro);
      HkrsRunOptions rh;
      rh.trace = true;
      rh.algorithm_h = true;
      const auto h = e.sssp(s, rh);
      REQUIRE(a.trace == h.trace);
      CHECK(a.invariant_checks > 0);
      CHECK(a.invariant_violations == 0);
      CHECK(a.dist == h.dist);
    }
  }

  TEST_CASE("trace events print compactly") {
    CHECK(to_string(TraceEvent{TraceEvent::kHyper, 5, 2, 11}) == "P hyper 5/2 11");
    CHECK(to_string(TraceEvent{TraceEvent::kCopy, 7, 0, 3}) == "P copy 7/0 3");
    CHECK(to_string(TraceEvent{TraceEvent::kArc, 3, 4, 9}) == "P arc 3>4 9");
  }

  TEST_CASE("update chains climb at most the region tree") {
    HkrsEngine e(grid(32, 32, 9));
    const int heights = e.division().num_heights();
    REQUIRE(heights >= 3);
    long long longest = 0;
    for (int s : e.boundary_vertices()) {
      const auto r = e.sssp(s);
      CHECK(r.max_update_chain <= heights + 1);
      longest = std::max(longest, r.max_update_chain);
    }
    CHECK(longest >= 2);
  }

  TEST_CASE("prebuilt division needs one DDG per height-1 region") {
    const auto g = reduce_degree(grid(10, 10, 2)).graph;
    auto div = recursive_division(g, 16);
    auto ddgs = build_ddgs(g, div);
    ddgs.pop_back();
    CHECK_THROWS_AS(HkrsEngine(g.num_vertices(), div, std::move(ddgs)), BadInput);
    HkrsEngine ok(g.num_vertices(), div, build_ddgs(g, div));
    const int s = ok.boundary_vertices().front();
    const auto want = dijkstra(g, s);
    const auto got = ok.sssp(s);
    for (int v : ok.boundary_vertices()) CHECK(got.dist[v] == want[v]);
  }

  TEST_CASE("designated face outside the graph") {
    HkrsOptions o;
    o.division.designated_face = 100000;
    CHECK_THROWS_AS(HkrsEngine(grid(6, 6, 1), o), FaceNotFound);
  }
}
