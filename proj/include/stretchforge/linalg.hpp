#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include <stretchforge/rational.hpp>

namespace stretchforge {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatQ = DenseMatrix<Rational>;
using VecQ = DenseVector<Rational>;

/// In-place reduced row echelon form over an exact field; returns the rank.
/// Pivoting picks the first non-zero entry — exact arithmetic needs no
/// magnitude heuristics.
template <typename Scalar>
int reduced_row_echelon(DenseMatrix<Scalar>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = pivot_row; r < rows; ++r)
      if (m(r, col) != Scalar(0)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    m.row(pivot_row).swap(m.row(sel));
    m.row(pivot_row) /= m(pivot_row, col);
    for (Eigen::Index r = 0; r < rows; ++r)
      if (r != pivot_row && m(r, col) != Scalar(0))
        m.row(r) -= m(r, col) * m.row(pivot_row);
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

template <typename Scalar>
int rank_of(DenseMatrix<Scalar> m) {
  return reduced_row_echelon(m);
}

/// Canonical basis of the row space: the non-zero rows of the RREF.
template <typename Scalar>
DenseMatrix<Scalar> row_space_basis(DenseMatrix<Scalar> m) {
  const int rank = reduced_row_echelon(m);
  return m.topRows(rank);
}

template <typename Scalar>
bool same_row_space(const DenseMatrix<Scalar>& a,
                    const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.cols()) return false;
  const DenseMatrix<Scalar> ra = row_space_basis(a);
  const DenseMatrix<Scalar> rb = row_space_basis(b);
  return ra.rows() == rb.rows() && ra == rb;
}

template <typename Scalar>
bool in_row_space(const DenseMatrix<Scalar>& m,
                  const DenseVector<Scalar>& v) {
  DenseMatrix<Scalar> stacked(m.rows() + 1, m.cols());
  stacked << m, v.transpose();
  return rank_of(stacked) == rank_of(DenseMatrix<Scalar>(m));
}

/// Basis of the right nullspace, returned column by column.
template <typename Scalar>
DenseMatrix<Scalar> nullspace(DenseMatrix<Scalar> m) {
  const Eigen::Index cols = m.cols();
  const int rank = reduced_row_echelon(m);

  std::vector<Eigen::Index> pivot_of_row(rank);
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rank; ++r) {
    Eigen::Index c = 0;
    while (c < cols && m(r, c) == Scalar(0)) ++c;
    pivot_of_row[r] = c;
    is_pivot[c] = true;
  }

  DenseMatrix<Scalar> basis =
      DenseMatrix<Scalar>::Zero(cols, cols - rank);
  Eigen::Index k = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, k) = Scalar(1);
    for (int r = 0; r < rank; ++r)
      basis(pivot_of_row[r], k) = -m(r, free_col);
    ++k;
  }
  return basis;
}

/// Exact solution of A x = b, or nullopt when inconsistent. Free variables
/// are set to zero.
template <typename Scalar>
std::optional<DenseVector<Scalar>> solve_exact(const DenseMatrix<Scalar>& a,
                                               const DenseVector<Scalar>& b) {
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const int rank = reduced_row_echelon(aug);
  for (int r = 0; r < rank; ++r) {
    Eigen::Index c = 0;
    while (c <= a.cols() && aug(r, c) == Scalar(0)) ++c;
    if (c == a.cols()) return std::nullopt;  // row (0 ... 0 | 1)
  }
  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(a.cols());
  for (int r = 0; r < rank; ++r) {
    Eigen::Index c = 0;
    while (aug(r, c) == Scalar(0)) ++c;
    x(c) = aug(r, a.cols());
  }
  return x;
}

inline VecQ flatten(const MatQ& m) {
  VecQ v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(k++) = m(i, j);
  return v;
}

}  // namespace stretchforge
