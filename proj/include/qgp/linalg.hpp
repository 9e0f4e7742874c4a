#pragma once
/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra: Eigen matrices over GaussianRational
 *        plus Gaussian-elimination free functions (Eigen's decompositions
 *        need norms, which have no meaning for exact scalars).
 */

#include "qgp/scalar.hpp"

#include <Eigen/Core>

#include <vector>

namespace Eigen {

template <>
struct NumTraits<qgp::GaussianRational> : GenericNumTraits<qgp::GaussianRational> {
  using Real = qgp::GaussianRational;
  using NonInteger = qgp::GaussianRational;
  using Nested = qgp::GaussianRational;
  using Literal = long;
  enum {
    IsComplex = 0,  // treated as an opaque exact ring scalar; use transpose(), not adjoint()
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qgp {

using Mat = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<GaussianRational, 1, Eigen::Dynamic>;

inline Mat zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return Mat::Constant(rows, cols, GaussianRational(0));
}

inline Mat identity_matrix(Eigen::Index n) {
  Mat m = zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

/// Exact row echelon reduction in place; returns pivot columns.
std::vector<Eigen::Index> row_reduce(Mat& m);

/// Basis of the right kernel {v : m v = 0}, exact.  Basis vectors are
/// canonical: each has a 1 in its free coordinate, listed in column order.
std::vector<Vec> kernel_basis(const Mat& m);

Eigen::Index rank(const Mat& m);

/// Inverse of a diagonal matrix with nonzero diagonal.
Mat diagonal_inverse(const Mat& m);

GaussianRational trace(const Mat& m);

}  // namespace qgp
