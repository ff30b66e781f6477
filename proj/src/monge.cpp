#include "pgsp/monge.hpp"

#include <algorithm>
#include <cstdlib>

namespace pgsp {

MongeView MongeView::with_rows(std::vector<int> lo, std::vector<int> hi) const {
  if (static_cast<int>(lo.size()) != rows_ || static_cast<int>(hi.size()) != rows_)
    throw BadInput("row interval count does not match rows");
  MongeView v(data_, rows_, cols_, stride_);
  for (int i = 0; i < rows_; ++i) {
    lo[i] = std::max(lo[i], 0);
    hi[i] = std::min(hi[i], cols_ - 1);
  }
  v.lo_ = std::move(lo);
  v.hi_ = std::move(hi);
  return v;
}

MongeView MongeView::submatrix(int r0, int c0, int r, int c) const {
  if (partial()) throw BadInput("submatrix of a partial view");
  if (r0 < 0 || c0 < 0 || r < 0 || c < 0 || r0 + r > rows_ || c0 + c > cols_)
    throw BadInput("submatrix out of range");
  return MongeView(data_ + static_cast<std::size_t>(r0) * stride_ + c0, r, c, stride_);
}

Weight MongeView::fill(int i, int j) const {
  if (shape_ == Shape::kNone) return kInf;
  int ni = i, nj = j;
  Weight sign = -1;
  switch (shape_) {
    case Shape::kBottomLeft: break;
    case Shape::kTopRight: ni = rows_ - 1 - i; nj = cols_ - 1 - j; break;
    case Shape::kTopLeft: ni = rows_ - 1 - i; sign = 1; break;
    case Shape::kBottomRight: nj = cols_ - 1 - j; sign = 1; break;
    case Shape::kNone: break;
  }
  const Weight phi = step_ * (edge_[ni] - nj) - step_ / 2 + 2 * static_cast<Weight>(ni);
  return sign * scale_ * phi;
}

// In the normalized frame the undefined cells are {(i, j) : j < L[i]} with L
// nondecreasing, and the matrix is negated into the <= convention. There the
// fill scale * phi with phi(i, j) = s*(L[i] - j) - s/2 + 2i, s = 4m + 6, is
// at least 3*scale on undefined cells, at most -scale on the first defined
// cell of every row, rises by >= 2*scale per row step and falls by s*scale per
// column step. Those four facts settle every mixed 2x2 block; fully
// undefined blocks are tight since phi is additive in i and j.
MongeView complete_partial(const MongeView& m) {
  MongeView out = m;
  if (!m.partial()) return out;
  const int rows = m.rows(), cols = m.cols();
  bool any_undefined = false;
  Weight maxabs = 0;
  for (int i = 0; i < rows; ++i) {
    if (m.lo(i) > 0 || m.hi(i) < cols - 1) any_undefined = true;
    for (int j = m.lo(i); j <= m.hi(i); ++j) {
      const Weight x = m(i, j);
      if (x >= kInf || x <= -kInf) throw BadInput("defined entry is infinite");
      maxabs = std::max(maxabs, x < 0 ? -x : x);
    }
  }
  if (!any_undefined) {
    out.lo_.clear();
    out.hi_.clear();
    return out;
  }
  auto empty = [&](int i) { return m.lo(i) > m.hi(i); };
  auto left_only = [&] {
    for (int i = 0; i < rows; ++i)
      if (!empty(i) && m.hi(i) != cols - 1) return false;
    return true;
  };
  auto right_only = [&] {
    for (int i = 0; i < rows; ++i)
      if (!empty(i) && m.lo(i) != 0) return false;
    return true;
  };
  // L[i]: first defined column (cols if empty); R[i]: last (-1 if empty).
  std::vector<int> L(rows), R(rows);
  for (int i = 0; i < rows; ++i) {
    L[i] = empty(i) ? cols : m.lo(i);
    R[i] = empty(i) ? -1 : m.hi(i);
  }
  std::vector<int> edge(rows);
  using Shape = MongeView::Shape;
  Shape shape = Shape::kNone;
  if (left_only() && std::is_sorted(L.begin(), L.end())) {
    shape = Shape::kBottomLeft;
    edge = L;
  } else if (right_only() && std::is_sorted(R.begin(), R.end())) {
    shape = Shape::kTopRight;
    for (int i = 0; i < rows; ++i) edge[i] = cols - 1 - R[rows - 1 - i];
  } else if (left_only() && std::is_sorted(L.rbegin(), L.rend())) {
    shape = Shape::kTopLeft;
    for (int i = 0; i < rows; ++i) edge[i] = L[rows - 1 - i];
  } else if (right_only() && std::is_sorted(R.rbegin(), R.rend())) {
    shape = Shape::kBottomRight;
    for (int i = 0; i < rows; ++i) edge[i] = cols - 1 - R[i];
  } else {
    throw NotStaircase("undefined entries do not form a one-sided monotone staircase");
  }
  const Weight step = 4 * static_cast<Weight>(rows) + 6;
  const Weight scale = 3 * maxabs + 1;
  const __int128 phi_max = static_cast<__int128>(step) * (cols + 1) + 2 * rows;
  if (phi_max * scale >= static_cast<__int128>(kInf) / 4) throw BadInput("completion fill would overflow");
  out.shape_ = shape;
  out.edge_ = std::move(edge);
  out.step_ = step;
  out.scale_ = scale;
  return out;
}

bool is_monge(const MongeView& m) {
  for (int i = 0; i + 1 < m.rows(); ++i)
    for (int j = 0; j + 1 < m.cols(); ++j) {
      const __int128 lhs = static_cast<__int128>(m(i, j)) + m(i + 1, j + 1);
      const __int128 rhs = static_cast<__int128>(m(i, j + 1)) + m(i + 1, j);
      if (lhs < rhs) return false;
    }
  return true;
}

bool is_monge_exhaustive(const MongeView& m) {
  const bool only_defined = !m.completed();
  auto ok = [&](int i, int j) { return !only_defined || m.defined(i, j); };
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.rows(); ++j)
      for (int k = 0; k < m.cols(); ++k) {
        if (!ok(i, k) || !ok(j, k)) continue;
        for (int l = k + 1; l < m.cols(); ++l) {
          if (!ok(i, l) || !ok(j, l)) continue;
          const __int128 lhs = static_cast<__int128>(m(i, k)) + m(j, l);
          const __int128 rhs = static_cast<__int128>(m(i, l)) + m(j, k);
          if (lhs < rhs) return false;
        }
      }
  return true;
}

}  // namespace pgsp
