#include <algorithm>
#include <map>

#include "doctest.h"
#include "pgsp/boundary_apsp.hpp"
#include "pgsp/ddg.hpp"
#include "pgsp/dijkstra.hpp"
#include "pgsp/division.hpp"
#include "test_util.hpp"

using namespace pgsp;
using namespace pgsp::testing;

namespace {

// Whole graph as one region with the walk of face f as its only hole.
Region whole_region(const EmbeddedPlanarGraph& g, int f) {
  Region r;
  r.height = 1;
  for (int e = 0; e < g.num_edges(); ++e) r.edges.push_back(e);
  for (int v = 0; v < g.num_vertices(); ++v) r.vertices.push_back(v);
  auto hole = face_vertices(g, f);
  std::rotate(hole.begin(), std::min_element(hole.begin(), hole.end()), hole.end());
  r.holes = {hole};
  r.boundary = hole;
  return r;
}

int largest_face(const EmbeddedPlanarGraph& g) {
  int best = 0;
  for (int f = 1; f < g.num_faces(); ++f)
    if (g.face_darts(f).size() > g.face_darts(best).size()) best = f;
  return best;
}

}  // namespace

TEST_SUITE("ddg") {
  TEST_CASE("single edge region") {
    const auto g = build_graph(2, {{0, 1, 4, 9}}, {{0}, {0}});
    Region r;
    r.edges = {0};
    r.vertices = {0, 1};
    r.holes = {{0, 1}};
    r.boundary = {0, 1};
    const auto d = build_ddg(g, r);
    REQUIRE(d.size() == 2);
    CHECK(d.dist.at(0, 0) == 0);
    CHECK(d.dist.at(0, 1) == 4);
    CHECK(d.dist.at(1, 0) == 9);
    CHECK(d.dist.at(1, 1) == 0);
  }

  TEST_CASE("8x8 grid with its outer cycle as boundary") {
    const auto g = grid(8, 8, 3);
    const auto r = whole_region(g, largest_face(g));
    REQUIRE(r.boundary.size() == 28);
    const auto d = build_ddg(g, r);
    CHECK(d.holes[0].monge);
    CHECK(d.explicit_arcs.empty());
    for (int x = 0; x < d.size(); ++x) {
      const auto dj = dijkstra(g, d.boundary[x]);
      const auto bf = bellman_ford(g, d.boundary[x]);
      for (int y = 0; y < d.size(); ++y) {
        CHECK(d.dist.at(x, y) == dj[d.boundary[y]]);
        CHECK(d.dist.at(x, y) == bf[d.boundary[y]]);
      }
    }
    const auto [up, lo] = triangle_views(d, 0);
    CHECK(is_monge(up));
    CHECK(is_monge(lo));
  }

  TEST_CASE("bipartite decomposition covers ordered pairs once") {
    const auto two = bipartite_decompose(0, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].a_size() == 1);
    CHECK(two[0].b_size() == 1);
    CHECK(two[0].a_lo != two[1].a_lo);
    for (int k : {1, 3, 8, 13}) {
      std::map<std::pair<int, int>, int> cover;
      for (const Piece& p : bipartite_decompose(0, k))
        for (int a = p.a_lo; a < p.a_hi; ++a)
          for (int b = p.b_lo; b < p.b_hi; ++b) ++cover[{a, b}];
      CHECK(cover.size() == static_cast<std::size_t>(k * (k - 1)));
      for (const auto& [ab, c] : cover) {
        CHECK(ab.first != ab.second);
        CHECK(c == 1);
      }
    }
  }

  TEST_CASE("k = 64 keeps pieces per vertex logarithmic") {
    std::vector<int> as_a(64, 0), as_b(64, 0);
    for (const Piece& p : bipartite_decompose(0, 64)) {
      for (int a = p.a_lo; a < p.a_hi; ++a) ++as_a[a];
      for (int b = p.b_lo; b < p.b_hi; ++b) ++as_b[b];
    }
    for (int v = 0; v < 64; ++v) {
      CHECK(as_a[v] <= 12);
      CHECK(as_b[v] <= 12);
    }
  }

  TEST_CASE("unit 3-cycle triangles are Monge") {
    const auto g = cycle(3, 1, 1);
    const auto d = build_ddg(g, whole_region(g, 0));
    const auto [up, lo] = triangle_views(d, 0);
    CHECK(is_monge_exhaustive(up));
    CHECK(is_monge_exhaustive(lo));
    CHECK(bipartite_decompose(0, 1).empty());
  }

  TEST_CASE("DDG union reproduces boundary distances") {
    for (const char* kind : {"grid", "annulus-grid", "delaunay-like"}) {
      const auto g = reduce_degree(family(kind, 16, 11)).graph;
      const auto div = recursive_division(g, 16);
      const auto ddgs = build_ddgs(g, div);
      REQUIRE(ddgs.size() == div.at_height[1].size());
      const auto arcs = ddg_union_arcs(ddgs);
      int checked = 0;
      for (int s = 0; s < g.num_vertices() && checked < 5; ++s) {
        if (div.vertex_height[s] < 1) continue;
        ++checked;
        const auto a = dijkstra(g, s);
        const auto b = dijkstra_arcs(g.num_vertices(), arcs, s);
        for (int v = 0; v < g.num_vertices(); ++v)
          if (div.vertex_height[v] >= 1) CHECK(a[v] == b[v]);
      }
      CHECK(checked == 5);
      for (const auto& d : ddgs)
        for (int h = 0; h < static_cast<int>(d.holes.size()); ++h)
          if (d.holes[h].monge && d.holes[h].size >= 2) {
            const auto [up, lo] = triangle_views(d, h);
            CHECK(is_monge(up));
            CHECK(is_monge(lo));
          }
    }
  }

  TEST_CASE("dump lists the matrix") {
    const auto g = build_graph(2, {{0, 1, 4, kInf}}, {{0}, {0}});
    Region r;
    r.id = 7;
    r.edges = {0};
    r.vertices = {0, 1};
    r.holes = {{0, 1}};
    r.boundary = {0, 1};
    CHECK(dump_ddg(build_ddg(g, r)) == "ddg 7 2\n0 4\ninf 0\n");
  }
}
