#include "qgp/orthopoly.hpp"

#include "qgp/qseries.hpp"

#include <stdexcept>

namespace qgp {

UniPoly little_q_legendre(int l, const GaussianRational& base) {
  if (l < 0) throw std::invalid_argument("little_q_legendre: negative degree");
  const GaussianRational qmlo = pow(base, -static_cast<long>(l));
  const GaussianRational qhi = pow(base, static_cast<long>(l) + 1);
  const UniPoly z = base * UniPoly::x();
  return terminating_bhs({qmlo, qhi}, {base}, base, z);
}

UniPoly askey_wilson(int n, const GaussianRational& a, const GaussianRational& b,
                     const GaussianRational& c, const GaussianRational& d,
                     const GaussianRational& q) {
  if (n < 0) throw std::invalid_argument("askey_wilson: negative degree");
  if (a.is_zero()) throw std::domain_error("askey_wilson: parameter a must be nonzero");

  const GaussianRational ab = a * b, ac = a * c, ad = a * d;
  const GaussianRational abcd_scale = pow(q, static_cast<long>(n) - 1) * ab * c * d;
  const GaussianRational qmn = pow(q, -static_cast<long>(n));

  UniPoly sum = UniPoly::constant(GaussianRational(1));  // k = 0 term
  GaussianRational coeff(1);
  UniPoly wk = UniPoly::constant(GaussianRational(1));  // prod_{j<k} (1 - 2a q^j x + a^2 q^{2j})
  GaussianRational qk(1);                               // q^{k-1} on entry to step k
  for (int k = 1; k <= n; ++k) {
    GaussianRational num = (GaussianRational(1) - qmn * qk) * (GaussianRational(1) - abcd_scale * qk);
    GaussianRational den(1);
    int j = 0;
    for (const auto& pair : {ab, ac, ad}) {
      const GaussianRational factor = GaussianRational(1) - pair * qk;
      if (factor.is_zero())
        throw std::domain_error("askey_wilson: denominator Pochhammer " + std::to_string(j) +
                                " vanishes at index " + std::to_string(k));
      den *= factor;
      ++j;
    }
    wk *= UniPoly({GaussianRational(1) + a * a * qk * qk, GaussianRational(-2) * a * qk});
    qk *= q;
    const GaussianRational qfactor = GaussianRational(1) - qk;
    if (qfactor.is_zero())
      throw std::domain_error("askey_wilson: (q;q)_k vanishes at index " + std::to_string(k));
    coeff *= num * q / (den * qfactor);
    sum += coeff * wk;
  }

  const GaussianRational front = pow(a, -static_cast<long>(n)) * q_pochhammer({ab, ac, ad}, q, n);
  const UniPoly p = front * sum;
  if (p.degree() != n)
    throw std::domain_error("askey_wilson: degenerate parameters, degree dropped below n");
  return p;
}

OrthogonalFamily OrthogonalFamily::little_q_legendre(QParameter qp) {
  return OrthogonalFamily(FamilyId::kLittleQLegendre, std::move(qp), HalfInt(0));
}

OrthogonalFamily OrthogonalFamily::askey_wilson_sym(QParameter qp, HalfInt sigma) {
  return OrthogonalFamily(FamilyId::kAskeyWilsonSym, std::move(qp), sigma);
}

OrthogonalFamily OrthogonalFamily::from_name(const std::string& name, QParameter qp,
                                             HalfInt sigma) {
  if (name == "little-q-legendre") return little_q_legendre(std::move(qp));
  if (name == "askey-wilson-sym") return askey_wilson_sym(std::move(qp), sigma);
  throw std::invalid_argument("unknown family \"" + name +
                              "\" (want little-q-legendre or askey-wilson-sym)");
}

std::string OrthogonalFamily::name() const {
  return id_ == FamilyId::kLittleQLegendre ? "little-q-legendre" : "askey-wilson-sym";
}

GaussianRational OrthogonalFamily::normalization_point() const {
  return id_ == FamilyId::kLittleQLegendre ? GaussianRational(0) : GaussianRational(1);
}

UniPoly OrthogonalFamily::member(int n) const {
  const GaussianRational q2(qp_.q_pow(2));
  if (id_ == FamilyId::kLittleQLegendre) {
    // Normalized already: only the k = 0 term of the sum survives at x = 0.
    return qgp::little_q_legendre(n, q2);
  }
  // a = b = -q^{2 sigma + 1}, c = d = q, in base q^2.
  const GaussianRational a(-qp_.s_pow(2L * (sigma_.twice + 1)));
  const GaussianRational c(qp_.q());
  return spherical_normalize(askey_wilson(n, a, a, c, c, q2), *this);
}

UniPoly spherical_normalize(const UniPoly& p, const OrthogonalFamily& family) {
  const GaussianRational value = p(family.normalization_point());
  if (value.is_zero())
    throw std::domain_error("spherical_normalize: polynomial vanishes at the normalization point");
  return p / value;
}

GaussianRational MomentFunctional::power_moment(long n) const {
  if (n < 0) throw std::invalid_argument("MomentFunctional: negative power");
  const Rational q2 = qp_.q_pow(2);
  return GaussianRational((Rational(1) - q2) / (Rational(1) - qp_.q_pow(2 * n + 2)));
}

GaussianRational moment(const MomentFunctional& h, const UniPoly& p) {
  GaussianRational acc(0);
  for (int k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * h.power_moment(k);
  return acc;
}

GaussianRational moment(const OrthogonalFamily& family, const UniPoly& p) {
  if (family.id() != FamilyId::kLittleQLegendre)
    throw std::domain_error("moment: family " + family.name() + " carries no moment functional");
  return moment(MomentFunctional(family.param()), p);
}

std::vector<GaussianRational> expand_in_family(const UniPoly& p, const OrthogonalFamily& family) {
  if (p.is_zero()) return {};
  const int deg = p.degree();
  std::vector<UniPoly> basis;
  basis.reserve(static_cast<size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) basis.push_back(family.member(k));

  std::vector<GaussianRational> coeffs(static_cast<size_t>(deg) + 1, GaussianRational(0));
  UniPoly rest = p;
  for (int d = deg; d >= 0; --d) {
    if (rest.degree() < d) continue;
    const GaussianRational c = rest.coeff(d) / basis[static_cast<size_t>(d)].leading();
    coeffs[static_cast<size_t>(d)] = c;
    rest -= c * basis[static_cast<size_t>(d)];
  }
  if (!rest.is_zero()) throw std::logic_error("expand_in_family: residual after back-substitution");
  return coeffs;
}

UniPoly assemble_from_family(const std::vector<GaussianRational>& coeffs,
                             const OrthogonalFamily& family) {
  UniPoly p;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    p += coeffs[k] * family.member(static_cast<int>(k));
  }
  return p;
}

}  // namespace qgp
