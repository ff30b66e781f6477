#include "doctest.h"
#include "pgsp/boundary_apsp.hpp"
#include "pgsp/dijkstra.hpp"
#include "test_util.hpp"

using namespace pgsp;
using namespace pgsp::testing;

namespace {

int largest_face(const EmbeddedPlanarGraph& g) {
  int best = 0;
  for (int f = 1; f < g.num_faces(); ++f)
    if (g.face_darts(f).size() > g.face_darts(best).size()) best = f;
  return best;
}

void check_against_dijkstra(const EmbeddedPlanarGraph& g, const FaceApspResult& r) {
  const int k = static_cast<int>(r.vertices.size());
  for (int i = 0; i < k; ++i) {
    const auto d = dijkstra(g, r.vertices[i]);
    for (int j = 0; j < k; ++j) REQUIRE(r.dist[i][j] == d[r.vertices[j]]);
  }
}

}  // namespace

TEST_SUITE("boundary_apsp") {
  TEST_CASE("two vertices on a cycle") {
    const auto g = cycle(6, 1, 3);
    for (ApspPath path : {ApspPath::kDijkstra, ApspPath::kFast}) {
      FaceApspRequest req;
      req.face = 0;
      req.vertices = {0, 2};
      req.path = path;
      const auto r = face_boundary_apsp(g, req);
      CHECK(r.vertices == std::vector<int>{0, 2});
      CHECK(r.dist == std::vector<std::vector<Weight>>{{0, 2}, {4, 0}});
      CHECK(r.fast == (path == ApspPath::kFast));
    }
  }

  TEST_CASE("face vertices follow the walk") {
    const auto g = cycle(5, 1, 1);
    const auto v = face_vertices(g, 0);
    CHECK(v.size() == 5);
    for (int i = 0; i < 5; ++i) {
      const int a = v[i], b = v[(i + 1) % 5];
      CHECK(((a + 1) % 5 == b || (b + 1) % 5 == a));
    }
    CHECK_THROWS_AS(face_vertices(g, 2), FaceNotFound);
  }

  TEST_CASE("20x20 grid, six outer vertices") {
    const auto g = grid(20, 20, 3);
    const int f = largest_face(g);
    const auto outer = face_vertices(g, f);
    REQUIRE(outer.size() == 76);
    FaceApspRequest req;
    req.face = f;
    for (int i = 0; i < 6; ++i) req.vertices.push_back(outer[i * 12]);
    for (ApspPath path : {ApspPath::kAuto, ApspPath::kDijkstra, ApspPath::kFast}) {
      for (Backend be : {Backend::kCq1, Backend::kCq3}) {
        req.path = path;
        req.backend = be;
        const auto r = face_boundary_apsp(g, req);
        CHECK(r.fast == (path == ApspPath::kFast));
        if (r.fast) CHECK(r.r == apsp_region_size(6, 400));
        check_against_dijkstra(g, r);
      }
    }
  }

  TEST_CASE("guard and region size") {
    CHECK(apsp_region_size(6, 400) == 324);
    CHECK(apsp_region_size(16, 400) == 399);
    CHECK(apsp_region_size(1, 400) == 4);
    CHECK(apsp_guard(2, 400));
    CHECK_FALSE(apsp_guard(3, 400));
    CHECK_FALSE(apsp_guard(1, 3));
  }

  TEST_CASE("automatic path takes the division when the guard holds") {
    const auto g = grid(20, 20, 4);
    const int f = largest_face(g);
    const auto outer = face_vertices(g, f);
    FaceApspRequest req;
    req.face = f;
    req.vertices = {outer[5], outer[40]};
    const auto r = face_boundary_apsp(g, req);
    CHECK(r.fast);
    check_against_dijkstra(g, r);
    req.path = ApspPath::kDijkstra;
    CHECK(face_boundary_apsp(g, req).dist == r.dist);
  }

  TEST_CASE("inner face of an annulus, all vertices") {
    const auto g = family("annulus-grid", 16, 2);
    int f = 0;
    // Second largest face is the hole.
    const int outer = largest_face(g);
    for (int x = 0; x < g.num_faces(); ++x)
      if (x != outer && (f == outer || g.face_darts(x).size() > g.face_darts(f).size())) f = x;
    FaceApspRequest req;
    req.face = f;
    req.path = ApspPath::kFast;
    const auto r = face_boundary_apsp(g, req);
    CHECK(r.vertices == face_vertices(g, f));
    check_against_dijkstra(g, r);
  }

  TEST_CASE("bad requests") {
    const auto g = grid(6, 6, 1);
    FaceApspRequest req;
    req.face = -1;
    CHECK_THROWS_AS(face_boundary_apsp(g, req), FaceNotFound);
    req.face = 0;
    const auto on = face_vertices(g, 0);
    req.vertices = {on[0], on[0]};
    CHECK_THROWS_AS(face_boundary_apsp(g, req), BadParams);
    int off = 0;
    while (std::find(on.begin(), on.end(), off) != on.end()) ++off;
    req.vertices = {off};
    CHECK_THROWS_AS(face_boundary_apsp(g, req), BadParams);
  }
}
