#include "wittlab/linalg.hpp"

#include <vector>

namespace wittlab {

RatMat rref(RatMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Rat inv = Rat(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rat f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return m.topRows(r);
}

Eigen::Index rank(const RatMat& m) { return rref(m).rows(); }

RatMat kernel(const RatMat& m) {
  const RatMat r = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivot_col(r.rows());
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < cols && r(i, c).is_zero()) ++c;
    pivot_col[i] = c;
    if (c < cols) is_pivot[c] = true;
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMat k(static_cast<Eigen::Index>(free_cols.size()), cols);
  k.setConstant(Rat(0));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    const Eigen::Index fc = free_cols[f];
    k(static_cast<Eigen::Index>(f), fc) = Rat(1);
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      if (pivot_col[i] < cols) k(static_cast<Eigen::Index>(f), pivot_col[i]) = -r(i, fc);
  }
  return rref(std::move(k));
}

RatMat vstack(const RatMat& a, const RatMat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  RatMat s(a.rows() + b.rows(), a.cols());
  s.topRows(a.rows()) = a;
  s.bottomRows(b.rows()) = b;
  return s;
}

RatMat intersect_rows(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw std::invalid_argument("intersect_rows: column count mismatch");
  const Eigen::Index n = std::max(a.cols(), b.cols());
  if (a.rows() == 0 || b.rows() == 0) return RatMat(0, n);
  // x = u a = v b  <=>  (u, v) in ker [a^T | -b^T].
  RatMat m(n, a.rows() + b.rows());
  m.setConstant(Rat(0));
  m.leftCols(a.rows()) = a.transpose();
  m.rightCols(b.rows()) = -b.transpose();
  const RatMat k = kernel(m);
  RatMat out(k.rows(), n);
  out.setConstant(Rat(0));
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    for (Eigen::Index j = 0; j < a.rows(); ++j)
      for (Eigen::Index c = 0; c < n; ++c) out(i, c) += k(i, j) * a(j, c);
  return rref(std::move(out));
}

bool in_rowspace(const RatMat& r, RatVec v) {
  // Reduce v against the rref rows.
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < r.cols() && r(i, c).is_zero()) ++c;
    if (c == r.cols()) continue;
    if (!v(c).is_zero()) {
      const Rat f = v(c);
      for (Eigen::Index j = 0; j < r.cols(); ++j) v(j) -= f * r(i, j);
    }
  }
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (!v(j).is_zero()) return false;
  return true;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  RatMat aug(rows, cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = b;
  const RatMat r = rref(std::move(aug));
  RatVec x(cols);
  x.setConstant(Rat(0));
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < cols && r(i, c).is_zero()) ++c;
    if (c == cols) {
      if (!r(i, cols).is_zero()) return std::nullopt;  // inconsistent row
      continue;
    }
    x(c) = r(i, cols);  // free variables fixed at zero
  }
  return x;
}

}  // namespace wittlab
