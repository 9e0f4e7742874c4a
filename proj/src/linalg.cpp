#include "qgp/linalg.hpp"

#include <stdexcept>

namespace qgp {

std::vector<Eigen::Index> row_reduce(Mat& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) { piv = r; break; }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const GaussianRational inv = GaussianRational(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat r = m;
  const std::vector<Eigen::Index> pivots = row_reduce(r);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (Eigen::Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  std::vector<Vec> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = Vec::Constant(m.cols(), GaussianRational(0));
    v(free) = GaussianRational(1);
    for (size_t i = 0; i < pivots.size(); ++i) {
      // row i of the echelon form reads: x_{pivots[i]} + sum_{free cols} r(i,c) x_c = 0
      v(pivots[i]) = -r(static_cast<Eigen::Index>(i), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Eigen::Index rank(const Mat& m) {
  Mat r = m;
  return static_cast<Eigen::Index>(row_reduce(r).size());
}

Mat diagonal_inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("diagonal_inverse: not square");
  Mat r = zero_matrix(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero())
        throw std::invalid_argument("diagonal_inverse: matrix is not diagonal");
    }
    if (m(i, i).is_zero()) throw std::domain_error("diagonal_inverse: zero diagonal entry");
    r(i, i) = GaussianRational(1) / m(i, i);
  }
  return r;
}

GaussianRational trace(const Mat& m) {
  GaussianRational t(0);
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

}  // namespace qgp
