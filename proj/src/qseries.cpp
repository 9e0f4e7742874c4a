#include "qgp/qseries.hpp"

#include <stdexcept>
#include <string>

namespace qgp {

namespace {
// Largest truncation order searched for when detecting a q^{-n} parameter.
constexpr int kMaxTermination = 4096;

// Least n >= 0 with a_i = q^{-n} for some i, or -1 if none found below the cap.
int termination_order(const std::vector<GaussianRational>& as, const GaussianRational& q) {
  if (q.is_zero()) throw std::domain_error("terminating_bhs: q = 0");
  GaussianRational qmn(1);  // q^{-n}
  for (int n = 0; n <= kMaxTermination; ++n) {
    for (const auto& a : as)
      if (a == qmn) return n;
    qmn /= q;
  }
  return -1;
}

}  // namespace

GaussianRational q_pochhammer(const GaussianRational& a, const GaussianRational& q, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative order");
  GaussianRational acc(1), aq = a;
  for (int j = 0; j < n; ++j) {
    acc *= GaussianRational(1) - aq;
    aq *= q;
  }
  return acc;
}

GaussianRational q_pochhammer(const std::vector<GaussianRational>& as,
                              const GaussianRational& q, int n) {
  GaussianRational acc(1);
  for (const auto& a : as) acc *= q_pochhammer(a, q, n);
  return acc;
}

GaussianRational q_integer(long n, const GaussianRational& q) {
  if (q.is_one()) throw std::domain_error("q_integer: q = 1");
  return (GaussianRational(1) - pow(q, n)) / (GaussianRational(1) - q);
}

UniPoly terminating_bhs(const std::vector<GaussianRational>& numerator_params,
                        const std::vector<GaussianRational>& denominator_params,
                        const GaussianRational& q, const UniPoly& z) {
  const int n = termination_order(numerator_params, q);
  if (n < 0)
    throw std::domain_error(
        "terminating_bhs: no numerator parameter of the form q^{-n}; series does not terminate");

  UniPoly sum = UniPoly::constant(GaussianRational(1));  // k = 0 term
  GaussianRational coeff(1);                             // prod (a;q)_k / [prod (b;q)_k (q;q)_k]
  UniPoly zk = UniPoly::constant(GaussianRational(1));
  GaussianRational qk(1);  // q^{k-1} on entry to step k
  for (int k = 1; k <= n; ++k) {
    GaussianRational num(1), den(1);
    for (const auto& a : numerator_params) num *= GaussianRational(1) - a * qk;
    for (size_t j = 0; j < denominator_params.size(); ++j) {
      const GaussianRational factor = GaussianRational(1) - denominator_params[j] * qk;
      if (factor.is_zero())
        throw std::domain_error("terminating_bhs: denominator parameter " + std::to_string(j) +
                                " vanishes at term " + std::to_string(k));
      den *= factor;
    }
    qk *= q;
    const GaussianRational qfactor = GaussianRational(1) - qk;  // new (q;q)_k factor
    if (qfactor.is_zero())
      throw std::domain_error("terminating_bhs: (q;q)_k vanishes at term " + std::to_string(k));
    coeff *= num / (den * qfactor);
    zk *= z;
    sum += coeff * zk;
  }
  return sum;
}

GaussianRational terminating_bhs(const std::vector<GaussianRational>& numerator_params,
                                 const std::vector<GaussianRational>& denominator_params,
                                 const GaussianRational& q, const GaussianRational& z) {
  const UniPoly p =
      terminating_bhs(numerator_params, denominator_params, q, UniPoly::constant(z));
  return p.coeff(0);
}

}  // namespace qgp
