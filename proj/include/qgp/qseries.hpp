#pragma once
/**
 * @file qseries.hpp
 * @brief q-combinatorial kernels: q-shifted factorials, q-integers and
 *        terminating basic hypergeometric sums, all exact.
 */

#include "qgp/scalar.hpp"
#include "qgp/unipoly.hpp"

#include <vector>

namespace qgp {

/// (a; q)_n = prod_{j=0}^{n-1} (1 - a q^j).  Empty product for n = 0.
GaussianRational q_pochhammer(const GaussianRational& a, const GaussianRational& q, int n);

/// (a1, ..., ak; q)_n = prod_i (a_i; q)_n.
GaussianRational q_pochhammer(const std::vector<GaussianRational>& as,
                              const GaussianRational& q, int n);

/// (1 - q^n) / (1 - q); q = 1 is rejected.
GaussianRational q_integer(long n, const GaussianRational& q);

/// Terminating basic hypergeometric sum
///   sum_{k=0}^{n} [prod_i (a_i;q)_k / prod_j (b_j;q)_k] z^k / (q;q)_k,
/// where n is the least nonnegative integer with some a_i = q^{-n}.
/// Rejects parameter lists with no such a_i, and any denominator factor
/// that vanishes before the truncation index.
UniPoly terminating_bhs(const std::vector<GaussianRational>& numerator_params,
                        const std::vector<GaussianRational>& denominator_params,
                        const GaussianRational& q, const UniPoly& z);

GaussianRational terminating_bhs(const std::vector<GaussianRational>& numerator_params,
                                 const std::vector<GaussianRational>& denominator_params,
                                 const GaussianRational& q, const GaussianRational& z);

}  // namespace qgp
