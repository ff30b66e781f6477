#include "doctest.h"
#include "pgsp/monge.hpp"
#include "pgsp/monge_rmq.hpp"
#include "test_util.hpp"

using namespace pgsp;
using namespace pgsp::testing;

namespace {

bool same(const RmqAnswer& a, const RmqAnswer& b) { return a.value == b.value && a.col == b.col; }

// Random staircase: one side of every row undefined, edge monotone.
MongeView staircase(const MongeView& full, Rng& rng, int shape) {
  const int m = full.rows(), n = full.cols();
  std::vector<int> e(m), lo(m), hi(m);
  for (auto& x : e) x = static_cast<int>(rng.uniform(0, n));
  std::sort(e.begin(), e.end());
  if (shape >= 2) std::reverse(e.begin(), e.end());
  for (int i = 0; i < m; ++i) {
    if (shape % 2 == 0) {
      lo[i] = e[i];
      hi[i] = n - 1;
    } else {
      lo[i] = 0;
      hi[i] = e[i] - 1;
    }
  }
  return full.with_rows(lo, hi);
}

}  // namespace

TEST_SUITE("monge_rmq") {
  TEST_CASE("generator produces Monge matrices") {
    Rng rng(1);
    for (int it = 0; it < 50; ++it) {
      const auto d = random_monge(rng, rng.uniform(1, 12), rng.uniform(1, 12));
      CHECK(is_monge_exhaustive(d));
      CHECK(is_monge(d));
    }
    DenseMatrix bad(2, 2);
    bad.at(0, 1) = 5;
    CHECK_FALSE(is_monge(bad));
  }

  TEST_CASE("completion of a full matrix is the identity") {
    Rng rng(2);
    const auto d = random_monge(rng, 5, 7);
    const auto c = complete_partial(MongeView(d));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 7; ++j) CHECK(c(i, j) == d.at(i, j));
  }

  TEST_CASE("2x2 completion satisfies the forced inequality") {
    DenseMatrix d(2, 2);
    d.at(0, 0) = 1;
    d.at(0, 1) = 2;
    d.at(1, 0) = 3;
    const auto c = complete_partial(MongeView(d).with_rows({0, 0}, {1, 0}));
    CHECK(c(0, 0) + c(1, 1) >= c(0, 1) + c(1, 0));
    CHECK(is_monge(c));
  }

  TEST_CASE("random 16x16 staircases complete to Monge") {
    Rng rng(3);
    for (int it = 0; it < 200; ++it) {
      const auto d = random_monge(rng, 16, 16);
      const auto p = staircase(MongeView(d), rng, static_cast<int>(it % 4));
      const auto c = complete_partial(p);
      CHECK(is_monge_exhaustive(c));
      for (int i = 0; i < 16; ++i)
        for (int j = p.lo(i); j <= p.hi(i); ++j) CHECK(c(i, j) == d.at(i, j));
    }
  }

  TEST_CASE("undefined entries in the middle of a row are not a staircase") {
    Rng rng(4);
    const auto d = random_monge(rng, 3, 5);
    CHECK_THROWS_AS(complete_partial(MongeView(d).with_rows({0, 2, 0}, {4, 2, 4})), NotStaircase);
  }

  TEST_CASE("dynamic RMQ full-range query is the row minimum") {
    Rng rng(5);
    const auto d = random_monge(rng, 20, 30);
    DynamicMongeRMQ q(d);
    for (int i = 0; i < 20; ++i) CHECK(same(q.query(i, 0, 29), brute_rmq(d, i, 0, 29, [](int) { return true; })));
  }

  TEST_CASE("deactivating a whole range yields the sentinel") {
    Rng rng(6);
    const auto d = random_monge(rng, 8, 10);
    DynamicMongeRMQ q(d);
    DecrementalMongeRMQ r(d);
    for (int j = 3; j <= 6; ++j) {
      q.deactivate_col(j);
      r.deactivate_col(j);
    }
    CHECK(q.query(2, 3, 6).value == kInf);
    CHECK(q.query(2, 3, 6).col == -1);
    CHECK(r.query(5, 3, 6).value == kInf);
    CHECK_THROWS_AS(q.query(0, 0, 10), ColumnOutOfRange);
    CHECK_THROWS_AS(q.deactivate_col(-1), ColumnOutOfRange);
  }

  TEST_CASE("dynamic and naive RMQ against brute force") {
    Rng rng(7);
    for (int it = 0; it < 20; ++it) {
      const int m = 64, n = 64;
      const auto d = random_monge(rng, m, n);
      DynamicMongeRMQ dy(d);
      NaiveMongeRMQ na(d);
      std::vector<char> act(n, 1);
      for (int op = 0; op < 500; ++op) {
        const int k = static_cast<int>(rng.uniform(0, 2));
        const int j = static_cast<int>(rng.uniform(0, n - 1));
        if (k == 0) {
          dy.deactivate_col(j);
          for (int i = 0; i < m; ++i) na.deactivate_entry(i, j);
          act[j] = 0;
        } else if (k == 1) {
          dy.activate_col(j);
          for (int i = 0; i < m; ++i) na.activate_entry(i, j);
          act[j] = 1;
        } else {
          const int i = static_cast<int>(rng.uniform(0, m - 1));
          const int a = static_cast<int>(rng.uniform(0, n - 1));
          const int b = static_cast<int>(rng.uniform(a, n - 1));
          const auto want = brute_rmq(d, i, a, b, [&](int c) { return act[c] != 0; });
          CHECK(same(dy.query(i, a, b), want));
          CHECK(same(na.query(i, a, b), want));
        }
      }
      CHECK(dy.check_envelopes());
    }
  }

  TEST_CASE("decremental RMQ matches dynamic before any deactivation") {
    Rng rng(8);
    const auto d = random_monge(rng, 33, 47);
    DynamicMongeRMQ dy(d);
    DecrementalMongeRMQ de(d);
    for (int i = 0; i < 33; ++i)
      for (int a = 0; a < 47; a += 5) CHECK(same(dy.query(i, a, 46), de.query(i, a, 46)));
  }

  TEST_CASE("decremental RMQ until every column is gone") {
    Rng rng(9);
    const int m = 24, n = 40;
    const auto d = random_monge(rng, m, n);
    DecrementalMongeRMQ de(d);
    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = j;
    for (int j = n - 1; j > 0; --j) std::swap(order[j], order[rng.uniform(0, j)]);
    std::vector<char> act(n, 1);
    for (int j : order) {
      de.deactivate_col(j);
      act[j] = 0;
      for (int i = 0; i < m; ++i) {
        const int a = static_cast<int>(rng.uniform(0, n - 1));
        const int b = static_cast<int>(rng.uniform(a, n - 1));
        CHECK(same(de.query(i, a, b), brute_rmq(d, i, a, b, [&](int c) { return act[c] != 0; })));
      }
      CHECK(de.check_envelopes());
    }
    CHECK_THROWS_AS(de.activate_col(0), ReactivationAttempt);
  }

  TEST_CASE("single-row decremental RMQ is a range minimum") {
    DenseMatrix d(1, 6);
    const Weight row[] = {5, -2, 7, -2, 0, 9};
    for (int j = 0; j < 6; ++j) d.at(0, j) = row[j];
    DecrementalMongeRMQ de(d);
    CHECK(same(de.query(0, 0, 5), {-2, 1}));
    CHECK(same(de.query(0, 2, 5), {-2, 3}));
    de.deactivate_col(3);
    CHECK(same(de.query(0, 2, 5), {0, 4}));
  }

  TEST_CASE("naive RMQ entry toggles are inverse") {
    Rng rng(10);
    const int m = 32, n = 32;
    const auto d = random_monge(rng, m, n);
    NaiveMongeRMQ na(d);
    na.deactivate_entry(4, 7);
    na.activate_entry(4, 7);
    for (int i = 0; i < m; ++i) CHECK(same(na.query(i, 0, n - 1), brute_rmq(d, i, 0, n - 1, [](int) { return true; })));
    std::vector<std::vector<char>> act(m, std::vector<char>(n, 1));
    for (int op = 0; op < 300; ++op) {
      const int i = static_cast<int>(rng.uniform(0, m - 1));
      const int j = static_cast<int>(rng.uniform(0, n - 1));
      switch (rng.uniform(0, 2)) {
        case 0: na.deactivate_entry(i, j); act[i][j] = 0; break;
        case 1: na.activate_entry(i, j); act[i][j] = 1; break;
        default: {
          const int b = static_cast<int>(rng.uniform(j, n - 1));
          CHECK(same(na.query(i, j, b), brute_rmq(d, i, j, b, [&](int c) { return act[i][c] != 0; })));
        }
      }
    }
    for (int j = 0; j < n; ++j) na.deactivate_entry(0, j);
    CHECK(na.query(0, 0, n - 1).value == kInf);
    na.reset();
    CHECK(na.query(0, 0, n - 1).col >= 0);
  }
}
