#include <algorithm>

#include "doctest.h"
#include "pgsp/monge_heap.hpp"
#include "test_util.hpp"

using namespace pgsp;
using namespace pgsp::testing;

namespace {

bool same(const Child& a, const Child& b) { return a.col == b.col && a.label == b.label; }

DenseMatrix from_rows(std::vector<std::vector<Weight>> rows) {
  DenseMatrix d(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) d.at(i, j) = rows[i][j];
  return d;
}

}  // namespace

TEST_SUITE("monge_heap") {
  TEST_CASE("parent intervals stay a valid partition") {
    Rng rng(1);
    for (int it = 0; it < 200; ++it) {
      const int m = static_cast<int>(rng.uniform(1, 12)), n = static_cast<int>(rng.uniform(1, 12));
      const auto d = random_monge(rng, m, n);
      const MongeView v(d);
      ParentIntervals pi(&v);
      std::vector<Weight> lab(m, kInf);
      for (int k = 0; k < 30; ++k) {
        const int r = static_cast<int>(rng.uniform(0, m - 1));
        const Weight x = rng.uniform(0, 60);
        pi.relax(r, x);
        lab[r] = std::min(lab[r], x);
        REQUIRE(pi.check());
      }
      // Every column's implicit label is the explicit minimum over relaxed rows.
      for (int b = 0; b < n; ++b) {
        Weight best = kInf;
        for (int r = 0; r < m; ++r) best = std::min(best, sat_add(lab[r], d.at(r, b)));
        CHECK(pi.implicit(b) == best);
      }
    }
  }

  TEST_CASE("first activation owns every column") {
    const auto d = from_rows({{1, 2, 3}, {4, 2, 1}});
    const MongeView v(d);
    FRMongeHeap h(&v, nullptr);
    CHECK(h.find_min().col == -1);
    CHECK(h.find_min().label == kInf);
    h.activate(0, 10);
    for (int b = 0; b < 3; ++b) CHECK(h.label_of(b) == 10 + d.at(0, b));
    CHECK(same(h.find_min(), {0, 11}));
    // Too large to win any column.
    h.activate(1, 1000);
    for (int b = 0; b < 3; ++b) CHECK(h.label_of(b) == 10 + d.at(0, b));
    CHECK(h.check());
    CHECK_THROWS_AS(h.activate(1, 0), DoubleActivate);
  }

  TEST_CASE("FR heap extracts in Dijkstra order on the piece") {
    Rng rng(2);
    for (int it = 0; it < 150; ++it) {
      const int m = static_cast<int>(rng.uniform(1, 12)), n = static_cast<int>(rng.uniform(1, 12));
      const auto d = random_monge(rng, m, n, 20);
      const MongeView v(d);
      FRMongeHeap fr(&v, NaiveMongeRMQ::build_template(v));
      std::vector<Weight> dd(m);
      for (auto& x : dd) x = rng.uniform(0, 40);
      std::vector<int> order(m);
      for (int i = 0; i < m; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return dd[a] < dd[b]; });
      std::vector<char> ex(n, 0), ac(m, 0);
      std::size_t next = 0;
      int extracted = 0;
      while (true) {
        const Child c = fr.find_min();
        if (next < order.size() && (c.col < 0 || dd[order[next]] <= c.label)) {
          fr.activate(order[next], dd[order[next]]);
          ac[order[next++]] = 1;
          REQUIRE(fr.check());
          for (int b = 0; b < n; ++b) {
            if (ex[b]) continue;
            Weight best = kInf;
            for (int i = 0; i < m; ++i)
              if (ac[i]) best = std::min(best, dd[i] + d.at(i, b));
            CHECK(fr.label_of(b) == best);
          }
          continue;
        }
        if (c.col < 0) break;
        Child want;
        for (int b = 0; b < n; ++b)
          if (!ex[b])
            for (int i = 0; i < m; ++i)
              if (ac[i] && (dd[i] + d.at(i, b) < want.label || (dd[i] + d.at(i, b) == want.label && b < want.col)))
                want = {b, dd[i] + d.at(i, b)};
        const Child e = fr.extract_min();
        ex[e.col] = 1;
        ++extracted;
        CHECK(same(e, want));
        REQUIRE(fr.check());
      }
      CHECK(extracted == n);
      CHECK(fr.find_min().col == -1);
    }
  }

  TEST_CASE("hyperarc row with label 5") {
    const auto d = from_rows({{3, 1, 4}});
    const MongeView v(d);
    for (Backend be : {Backend::kCq1, Backend::kCq3}) {
      HKMongeHeap h(&v, be, nullptr, nullptr);
      h.relax(0, 5);
      CHECK(same(h.get_min_child(0), {1, 6}));
    }
  }

  TEST_CASE("HK heap scripted operations") {
    const auto d = from_rows({{0, 0, 0}, {0, 0, 0}});
    const MongeView v(d);
    for (Backend be : {Backend::kCq1, Backend::kCq3}) {
      HKMongeHeap h(&v, be, nullptr, nullptr);
      CHECK_THROWS_AS(h.get_min_child(0), NotRelaxed);
      h.relax(1, kInf);
      CHECK(h.get_min_child(1).col == -1);
      h.relax(0, 10);
      CHECK(same(h.get_min_child(0), {0, 10}));
      // Non-minimal child: the minimum stays.
      CHECK(same(h.extract(2), {0, 10}));
      CHECK(same(h.extract(0), {1, 10}));
      CHECK_THROWS_AS(h.extract(0), AlreadyInactive);
      // Only child left; extracting it leaves the sentinel.
      CHECK(h.extract(1).col == -1);
      CHECK(h.get_min_child(0).col == -1);
      // A better row recaptures the inactive columns.
      h.relax(1, 5);
      CHECK(h.active(0));
      CHECK(same(h.get_min_child(1), {0, 5}));
      CHECK(h.parent(2) == 1);
    }
  }

  TEST_CASE("HK backends agree with brute force") {
    Rng rng(3);
    for (int it = 0; it < 150; ++it) {
      const int m = static_cast<int>(rng.uniform(1, 12)), n = static_cast<int>(rng.uniform(1, 12));
      const auto d = random_monge(rng, m, n, 20);
      const MongeView v(d);
      HKMongeHeap h1(&v, Backend::kCq1, nullptr, nullptr), h3(&v, Backend::kCq3, nullptr, nullptr);
      std::vector<Weight> lab(m, kInf);
      std::vector<char> act(n, 1);
      auto brute = [&](int r) {
        const auto [x, y] = h1.intervals().interval(r);
        Child c;
        for (int b = x; b <= y; ++b)
          if (act[b] && lab[r] + d.at(r, b) < c.label) c = {b, lab[r] + d.at(r, b)};
        return c;
      };
      for (int k = 0; k < 200; ++k) {
        const auto op = rng.uniform(0, 2);
        if (op == 0) {
          const int r = static_cast<int>(rng.uniform(0, m - 1));
          const Weight x = rng.uniform(0, 60);
          const bool down = x < lab[r];
          h1.relax(r, x);
          h3.relax(r, x);
          lab[r] = std::min(lab[r], x);
          if (down) {
            const auto [lo, hi] = h1.intervals().interval(r);
            for (int b = std::max(lo, 0); b <= hi; ++b) act[b] = 1;
          }
          for (int b = 0; b < n; ++b) CHECK(h1.active(b) == (act[b] != 0));
        } else if (op == 1) {
          const int r = static_cast<int>(rng.uniform(0, m - 1));
          if (!h1.relaxed(r)) continue;
          const Child a = h1.get_min_child(r), b = h3.get_min_child(r);
          CHECK(same(a, b));
          CHECK(same(a, brute(r)));
        } else {
          const int b = static_cast<int>(rng.uniform(0, n - 1));
          if (!act[b]) continue;
          const Child x = h1.extract(b), y = h3.extract(b);
          act[b] = 0;
          CHECK(same(x, y));
          const int p = h1.parent(b);
          if (p >= 0) CHECK(same(x, brute(p)));
        }
      }
    }
  }
}
