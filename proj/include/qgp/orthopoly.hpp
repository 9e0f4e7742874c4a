#pragma once
/**
 * @file orthopoly.hpp
 * @brief The two spherical polynomial families — little q-Legendre and the
 *        symmetric Askey-Wilson specialization — together with the moment
 *        functional realizing the Haar state on the biinvariant subalgebra,
 *        and conversion between the monomial and spherical bases.
 */

#include "qgp/scalar.hpp"
#include "qgp/unipoly.hpp"

#include <string>
#include <vector>

namespace qgp {

/// p_l(x; base) = 2phi1(base^{-l}, base^{l+1}; base; base, base*x).
/// Degree exactly l; value 1 at x = 0.
UniPoly little_q_legendre(int l, const GaussianRational& base);
inline UniPoly little_q_legendre(int l, const QParameter& qp) {
  return little_q_legendre(l, GaussianRational(qp.q()));
}

/// Askey-Wilson polynomial p_n(x; a, b, c, d | q) in x = cos(theta):
///   a^{-n} (ab, ac, ad; q)_n
///     * 4phi3[q^{-n}, q^{n-1}abcd, a e^{i theta}, a e^{-i theta};
///             ab, ac, ad; q, q],
/// with (a e^{i theta}; q)_k (a e^{-i theta}; q)_k expanded through
/// prod_{j<k} (1 - 2 a q^j x + a^2 q^{2j}).  Exact degree n.
/// Requires a != 0 and no vanishing (ab, ac, ad; q)_k for k < n.
UniPoly askey_wilson(int n, const GaussianRational& a, const GaussianRational& b,
                     const GaussianRational& c, const GaussianRational& d,
                     const GaussianRational& q);

enum class FamilyId { kLittleQLegendre, kAskeyWilsonSym };

/// A spherical family: members have exact degree n and value 1 at the
/// family's normalization point.
class OrthogonalFamily {
 public:
  static OrthogonalFamily little_q_legendre(QParameter qp);
  static OrthogonalFamily askey_wilson_sym(QParameter qp, HalfInt sigma);
  /// Family ids: "little-q-legendre" | "askey-wilson-sym".
  static OrthogonalFamily from_name(const std::string& name, QParameter qp, HalfInt sigma);

  FamilyId id() const { return id_; }
  const QParameter& param() const { return qp_; }
  HalfInt sigma() const { return sigma_; }
  std::string name() const;

  GaussianRational normalization_point() const;
  /// The degree-n normalized member.
  UniPoly member(int n) const;

 private:
  OrthogonalFamily(FamilyId id, QParameter qp, HalfInt sigma)
      : id_(id), qp_(std::move(qp)), sigma_(sigma) {}
  FamilyId id_;
  QParameter qp_;
  HalfInt sigma_;
};

/// p / p(x0) at the family's normalization point x0; p(x0) = 0 is rejected.
UniPoly spherical_normalize(const UniPoly& p, const OrthogonalFamily& family);

/// Moment rule of the Haar state on the biinvariant subalgebra:
/// h(x^n) = (1 - q^2) / (1 - q^{2n+2}), the closed form of the Jackson sum
/// sum_{k>=0} (1 - q^2) q^{2k} x^n |_{x = q^{2k}}.
class MomentFunctional {
 public:
  explicit MomentFunctional(QParameter qp) : qp_(std::move(qp)) {}
  const QParameter& param() const { return qp_; }
  GaussianRational power_moment(long n) const;

 private:
  QParameter qp_;
};

GaussianRational moment(const MomentFunctional& h, const UniPoly& p);
/// Family-checked moment; only the little q-Legendre family carries one.
GaussianRational moment(const OrthogonalFamily& family, const UniPoly& p);

/// Coefficients (c_0, ..., c_deg(p)) with p = sum_k c_k member(k), by
/// back-substitution on the degree-triangular basis.  Empty for p = 0.
std::vector<GaussianRational> expand_in_family(const UniPoly& p, const OrthogonalFamily& family);

/// sum_k coeffs[k] * member(k).
UniPoly assemble_from_family(const std::vector<GaussianRational>& coeffs,
                             const OrthogonalFamily& family);

}  // namespace qgp
