#include "qgp/linearization.hpp"

#include <stdexcept>

namespace qgp {

GaussianRational LinearizationRow::sum() const {
  GaussianRational acc(0);
  for (const auto& [k, c] : coefficients) acc += c;
  return acc;
}

bool LinearizationRow::all_nonnegative_real() const {
  for (const auto& [k, c] : coefficients)
    if (!c.is_real() || c.re().sign() < 0) return false;
  return true;
}

LinearizationRow linearize_triangular(int l, int m, const OrthogonalFamily& family) {
  if (l < 0 || m < 0) throw std::invalid_argument("linearize_triangular: negative index");
  const UniPoly product = family.member(l) * family.member(m);
  const std::vector<GaussianRational> coeffs = expand_in_family(product, family);

  LinearizationRow row{l, m, {}};
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) row.coefficients.emplace(static_cast<int>(k), coeffs[k]);
  return row;
}

LinearizationRow linearize_moment(int l, int m, const QParameter& qp) {
  if (l < 0 || m < 0) throw std::invalid_argument("linearize_moment: negative index");
  const OrthogonalFamily family = OrthogonalFamily::little_q_legendre(qp);
  const MomentFunctional h(qp);

  const UniPoly product = family.member(l) * family.member(m);
  LinearizationRow row{l, m, {}};
  for (int k = 0; k <= l + m; ++k) {
    const UniPoly pk = family.member(k);
    const GaussianRational c = moment(h, product * pk) / moment(h, pk * pk);
    if (!c.is_zero()) row.coefficients.emplace(k, c);
  }
  return row;
}

PosdefVerdict posdef_check_Z(const UniPoly& p, const OrthogonalFamily& family) {
  const std::vector<GaussianRational> coeffs = expand_in_family(p, family);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_real() || coeffs[k].re().sign() < 0)
      return {false, static_cast<int>(k)};
  }
  return {true, -1};
}

}  // namespace qgp
