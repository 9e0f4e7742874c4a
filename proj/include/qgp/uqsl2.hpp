#pragma once
/**
 * @file uqsl2.hpp
 * @brief The dual picture: the quantized enveloping algebra acting through
 *        functionals, its finite-dimensional weight representations, the
 *        twisted-primitive coideal elements, corepresentation matrices and
 *        spherical elements for both the quantum-subgroup and the coideal
 *        pair, including the Askey-Wilson comparison.
 *
 * Tokens: the group-like cartan(z) with z an integer (so every value stays
 * a power of s), the raising functional and the lowering functional.  They
 * act on products through
 *   cartan(ab) = cartan(a) cartan(b),
 *   raise(ab)  = cartan(a) raise(b) + raise(a) cartan^{-1}(b),
 * and likewise for lower.
 */

#include "qgp/linalg.hpp"
#include "qgp/scalar.hpp"
#include "qgp/suq2.hpp"
#include "qgp/unipoly.hpp"

#include <string>
#include <vector>

namespace qgp {

struct DualToken {
  enum class Kind { kCartan, kRaise, kLower };
  Kind kind = Kind::kCartan;
  int z = 0;  // cartan exponent; ignored otherwise
};

/// Scalar combination of token words, evaluable on any algebra element.
class DualWord final : public DualFunctional {
 public:
  DualWord() = default;

  static DualWord cartan(int z);
  static DualWord raising();
  static DualWord lowering();
  /// X_sigma = i raise - i lower - kappa(sigma) (cartan(1) - cartan(-1)),
  /// kappa = (q^{-sigma} - q^{sigma}) / (q^{-1} - q); self-adjoint generator
  /// of the two-sided coideal.  sigma must be half-integral.
  static DualWord twisted_primitive(const QParameter& qp, HalfInt sigma);

  friend DualWord operator+(const DualWord& f, const DualWord& g);
  friend DualWord operator*(const GaussianRational& c, const DualWord& f);
  /// Concatenation product (composition in the dual algebra).
  friend DualWord operator*(const DualWord& f, const DualWord& g);

  GaussianRational eval_monomial(const Suq2& algebra, const PBWKey& key) const override;

 private:
  std::vector<std::pair<GaussianRational, std::vector<DualToken>>> terms_;
};

/// Weight representation of spin l: cartan diagonal q^l, ..., q^{-l},
/// raising superdiagonal, lowering subdiagonal, in the rational
/// (non-unitary) normalization.  Relations are verified exactly on
/// construction.
struct WeightRep {
  HalfInt l;
  Mat cartan;  // pi(A)
  Mat raise;   // pi(B)
  Mat lower;   // pi(C)

  Eigen::Index dim() const { return cartan.rows(); }
};

/// Built by extracting the top irreducible block of the 2l-fold tensor power
/// of the defining two-dimensional representation.
WeightRep build_rep(const QParameter& qp, HalfInt l);

/// pi(cartan(-2)) = diag(q^{-2l}, ..., q^{2l}); positive diagonal with
/// trace equal to the trace of its inverse.
Mat f_matrix(const QParameter& qp, HalfInt l);

/// pi(X_sigma) in the spin-l weight representation.
Mat x_sigma_matrix(const QParameter& qp, HalfInt l, HalfInt sigma);

/// Exact basis of ker pi(X_sigma).
std::vector<Vec> invariant_vectors(const QParameter& qp, HalfInt l, HalfInt sigma);

/// Kernel dimensions of pi(X_sigma) for 2l = 0 .. two_l_max.
std::vector<int> gelfand_scan(const QParameter& qp, HalfInt sigma, int two_l_max);

/// Spin-l corepresentation matrix with entries in the algebra.
/// Comultiplication and counit laws and the duality
/// f(t_ij) = pi(f)_ij for the three generators hold exactly on return.
struct CorepMatrix {
  HalfInt l;
  std::vector<std::vector<AlgebraElement>> t;

  int dim() const { return static_cast<int>(t.size()); }
};

inline constexpr int kDefaultCorepBound = 4;  // cost grows as 4^{2l}

CorepMatrix build_corep(const Suq2& algebra, HalfInt l, int two_l_bound = kDefaultCorepBound);

/// The unique circle-biinvariant, counit-normalized element in the span of
/// the spin-l corepresentation entries (integer l).  Errors when the
/// solution space does not have dimension one.
AlgebraElement spherical_u1(const Suq2& algebra, int l, int two_l_bound = kDefaultCorepBound);

/// The unique coideal-biinvariant, counit-normalized element in the span of
/// the spin-l entries; verified a posteriori to be killed by the
/// twisted-primitive element on both sides.
AlgebraElement spherical_coideal(const Suq2& algebra, int l, HalfInt sigma,
                                 int two_l_bound = kDefaultCorepBound);

/// The quadratic biinvariant element substituted into the Askey-Wilson
/// family; counit value 1.
AlgebraElement spherical_argument(const Suq2& algebra, HalfInt sigma);

struct AwComparison {
  bool equal = false;            // normalized Askey-Wilson value equals the spherical element
  GaussianRational multiple;     // value of the raw polynomial at the normalization point
};

/// Evaluates the degree-l Askey-Wilson member (parameters
/// a = b = -q^{2 sigma + 1}, c = d = q, base q^2), normalized at 1, on the
/// quadratic invariant, and compares with spherical_coideal.
AwComparison compare_aw(const Suq2& algebra, int l, HalfInt sigma,
                        int two_l_bound = kDefaultCorepBound);

/// Evaluates a polynomial on an algebra element (Horner).
AlgebraElement evaluate_poly(const Suq2& algebra, const UniPoly& p, const AlgebraElement& x);

}  // namespace qgp
