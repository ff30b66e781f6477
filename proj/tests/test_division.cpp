#include <cmath>
#include <set>

#include "doctest.h"
#include "pgsp/division.hpp"
#include "test_util.hpp"

using namespace pgsp;
using namespace pgsp::testing;

namespace {

// Edge-disjoint cover, nesting, size limits and boundary definition.
void check_division(const EmbeddedPlanarGraph& g, const RecursiveDivision& div) {
  const int n = g.num_vertices();
  REQUIRE(div.num_heights() >= 1);
  REQUIRE(div.at_height[div.num_heights()].size() == 1);
  for (int h = 1; h <= div.num_heights(); ++h) {
    std::vector<int> owner(g.num_edges(), -1);
    std::vector<int> count(n, 0);
    for (int id : div.at_height[h]) {
      const Region& r = div.regions[id];
      CHECK(r.height == h);
      for (int e : r.edges) {
        CHECK(owner[e] == -1);
        owner[e] = id;
      }
      for (int v : r.vertices) ++count[v];
      if (h < div.num_heights()) {
        REQUIRE(r.parent >= 0);
        const Region& p = div.regions[r.parent];
        CHECK(p.height == h + 1);
        const std::set<int> pe(p.edges.begin(), p.edges.end());
        for (int e : r.edges) CHECK(pe.count(e) == 1);
      }
    }
    for (int e = 0; e < g.num_edges(); ++e) CHECK(owner[e] != -1);
    if (h == 1)
      for (int v = 0; v < n; ++v) {
        const bool shared = count[v] >= 2 || (div.mandatory[v] && count[v] >= 1);
        CHECK((div.vertex_height[v] >= 1) == shared);
      }
  }
}

}  // namespace

TEST_SUITE("division") {
  TEST_CASE("r vector squares until it covers n") {
    CHECK(r_vector_for(100, 16) == std::vector<int>{16, 256});
    CHECK(r_vector_for(10, 16) == std::vector<int>{16});
    CHECK_THROWS_AS(r_vector_for(100, 3), BadParams);
  }

  TEST_CASE("small graph is one region without boundary") {
    const auto g = grid(3, 3, 1);
    const auto div = recursive_division(g, 16);
    REQUIRE(div.num_heights() == 1);
    REQUIRE(div.at_height[1].size() == 1);
    CHECK(div.regions[div.at_height[1][0]].boundary.empty());
    for (int v = 0; v < g.num_vertices(); ++v) CHECK(div.vertex_height[v] == 0);
  }

  TEST_CASE("16x16 grid with r = 64") {
    const auto g = reduce_degree(grid(16, 16, 2)).graph;
    const auto div = r_division(g, 64);
    check_division(g, div);
    std::vector<int> count(g.num_vertices(), 0);
    for (int id : div.at_height[1]) {
      CHECK(div.regions[id].vertices.size() <= 64);
      for (int v : div.regions[id].vertices) ++count[v];
    }
    for (int c : count) CHECK(c <= 3);
  }

  TEST_CASE("32x32 grid with r = 16 nests every region") {
    const auto g = reduce_degree(grid(32, 32, 3)).graph;
    const auto div = recursive_division(g, 16);
    CHECK(div.num_heights() >= 3);
    check_division(g, div);
    for (int id : div.at_height[1]) CHECK(div.regions[id].vertices.size() <= 16);
  }

  TEST_CASE("holes list every boundary vertex once") {
    for (const char* kind : {"grid", "annulus-grid", "delaunay-like"}) {
      const auto g = reduce_degree(family(kind, 14, 5)).graph;
      const auto div = recursive_division(g, 16);
      for (const Region& r : div.regions) {
        std::vector<int> flat;
        for (const auto& h : r.holes) flat.insert(flat.end(), h.begin(), h.end());
        CHECK(flat == r.boundary);
        std::set<int> uniq(flat.begin(), flat.end());
        CHECK(uniq.size() == flat.size());
      }
    }
  }

  TEST_CASE("mandatory vertices stay boundary") {
    const auto g = reduce_degree(grid(12, 12, 4)).graph;
    DivisionOptions o;
    o.mandatory = {0, 77, 143};
    const auto div = recursive_division(g, 16, o);
    for (int v : o.mandatory) CHECK(div.vertex_height[v] >= 1);
    o.mandatory = {100000};
    CHECK_THROWS_AS(recursive_division(g, 16, o), BadParams);
  }

  TEST_CASE("boundary size per region on a 64x64 grid") {
    const auto g = reduce_degree(grid(64, 64, 1)).graph;
    const auto div = r_division(g, 256);
    check_division(g, div);
    std::size_t worst = 0;
    for (int id : div.at_height[1]) worst = std::max(worst, div.regions[id].boundary.size());
    const double c = static_cast<double>(worst) / std::sqrt(256.0);
    MESSAGE("max boundary / sqrt(r) = " << c << ", max holes " << div.max_holes);
    CHECK(worst > 0);
  }

  TEST_CASE("division dump is deterministic") {
    const auto g = reduce_degree(grid(10, 10, 9)).graph;
    CHECK(dump_division(recursive_division(g, 16)) == dump_division(recursive_division(g, 16)));
  }
}
