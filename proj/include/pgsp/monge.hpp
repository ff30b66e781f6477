#pragma once

#include <vector>

#include "pgsp/types.hpp"

namespace pgsp {

// Owning row-major matrix, used by tests and as backing storage.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Weight> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c, Weight fill = 0) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}
  Weight& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Weight at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Non-owning view of a (possibly partial) matrix with the convention
//   M[i][k] + M[j][l] >= M[i][l] + M[j][k]   for i < j, k < l.
// Row i is defined on [lo(i), hi(i)] (empty when lo > hi). Undefined entries
// read as kInf until complete_partial() installs a Monge-preserving fill.
class MongeView {
 public:
  MongeView() = default;
  MongeView(const Weight* data, int rows, int cols, int stride)
      : data_(data), rows_(rows), cols_(cols), stride_(stride) {}
  MongeView(const DenseMatrix& m) : MongeView(m.a.data(), m.rows, m.cols, m.cols) {}  // NOLINT

  // Restricts each row to [lo[i], hi[i]]; sizes must equal rows().
  MongeView with_rows(std::vector<int> lo, std::vector<int> hi) const;
  MongeView submatrix(int r0, int c0, int r, int c) const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool partial() const { return !lo_.empty(); }
  bool completed() const { return shape_ != Shape::kNone || lo_.empty(); }
  int lo(int i) const { return lo_.empty() ? 0 : lo_[i]; }
  int hi(int i) const { return lo_.empty() ? cols_ - 1 : hi_[i]; }
  bool defined(int i, int j) const { return j >= lo(i) && j <= hi(i); }

  Weight operator()(int i, int j) const {
    if (lo_.empty() || (j >= lo_[i] && j <= hi_[i])) return data_[static_cast<std::size_t>(i) * stride_ + j];
    return fill(i, j);
  }

  friend MongeView complete_partial(const MongeView& m);

 private:
  enum class Shape { kNone, kBottomLeft, kTopRight, kTopLeft, kBottomRight };
  Weight fill(int i, int j) const;

  const Weight* data_ = nullptr;
  int rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<int> lo_, hi_;
  Shape shape_ = Shape::kNone;
  std::vector<int> edge_;  // staircase edge in the normalized frame
  Weight scale_ = 0;
  Weight step_ = 0;
};

// Returns a fully defined view: defined entries unchanged, undefined entries
// filled so that the whole matrix satisfies the inequality above. Supported
// shapes: undefined entries all on one side of every row, with the defined
// edge moving monotonically. Throws NotStaircase otherwise, BadInput if a
// defined entry is kInf or the fill would overflow.
MongeView complete_partial(const MongeView& m);

// True iff every adjacent 2x2 block satisfies the inequality (equivalent to
// the full condition for finite matrices). Only meaningful on complete views.
bool is_monge(const MongeView& m);

// Checks all 4-tuples of rows and columns whose four entries are defined.
bool is_monge_exhaustive(const MongeView& m);

}  // namespace pgsp
