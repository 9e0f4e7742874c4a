#pragma once
/**
 * @file linearization.hpp
 * @brief Linearization coefficients of products of spherical family members,
 *        by two independent routes, and the positive-definiteness test on
 *        the biinvariant subalgebra.
 */

#include "qgp/orthopoly.hpp"
#include "qgp/scalar.hpp"

#include <map>

namespace qgp {

/// Row of linearization coefficients: member(l) * member(m) =
/// sum_k coefficients[k] * member(k).  Zero entries are dropped.
struct LinearizationRow {
  int l = 0;
  int m = 0;
  std::map<int, GaussianRational> coefficients;

  GaussianRational sum() const;
  bool all_nonnegative_real() const;
};

/// Multiplies the two members as polynomials and re-expands in the family.
LinearizationRow linearize_triangular(int l, int m, const OrthogonalFamily& family);

/// Independent route via the moment functional:
/// c_{lm}(k) = h(member_l member_m member_k) / h(member_k^2).
/// Only defined for the little q-Legendre family.
LinearizationRow linearize_moment(int l, int m, const QParameter& qp);

struct PosdefVerdict {
  bool positive_definite = false;
  int witness_index = -1;  // first violating expansion index when not positive definite
};

/// Positive definite on the biinvariant subalgebra iff every expansion
/// coefficient in the spherical family is real and >= 0.
PosdefVerdict posdef_check_Z(const UniPoly& p, const OrthogonalFamily& family);

}  // namespace qgp
