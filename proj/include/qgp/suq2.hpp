#pragma once
/**
 * @file suq2.hpp
 * @brief The coordinate Hopf *-algebra of the quantum SU(2) group in exact
 *        arithmetic: PBW normal-form multiplication, comultiplication,
 *        counit, antipode, both involutions, the Haar functional, the
 *        multiplicative exponent family f_z, dual actions and
 *        U(1)-biinvariance.
 *
 * Generators a (alpha), b (beta), c (gamma), d (delta) satisfy
 *   ab = q ba,  ac = q ca,  bd = q db,  cd = q dc,  bc = cb,
 *   ad - q bc = da - q^{-1} bc = 1,
 * and the normal-form basis consists of the monomials
 * alpha^k beta^m gamma^n and delta^k beta^m gamma^n.
 */

#include "qgp/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qgp {

/// Canonical PBW monomial: k >= 0 encodes alpha^k, k < 0 encodes delta^{-k};
/// m and n are the beta and gamma exponents.
struct PBWKey {
  long k = 0;
  int m = 0;
  int n = 0;

  int degree() const { return static_cast<int>(k < 0 ? -k : k) + m + n; }
  auto operator<=>(const PBWKey&) const = default;
  std::string str() const;
};

/// Finitely supported scalar combination of PBW monomials.  No stored zeros.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement term(PBWKey key, GaussianRational coeff);

  const std::map<PBWKey, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max monomial degree, -1 for zero
  GaussianRational coeff(const PBWKey& key) const;
  void add_term(const PBWKey& key, const GaussianRational& coeff);

  friend AlgebraElement operator-(const AlgebraElement& x);
  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const GaussianRational& s, const AlgebraElement& x);
  AlgebraElement& operator+=(const AlgebraElement& y) { *this = *this + y; return *this; }
  AlgebraElement& operator-=(const AlgebraElement& y) { *this = *this - y; return *this; }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

  std::string str() const;

 private:
  std::map<PBWKey, GaussianRational> terms_;
};

/// Element of the tensor square, multiplied factorwise.
class TensorElement {
 public:
  using Key = std::pair<PBWKey, PBWKey>;

  TensorElement() = default;
  static TensorElement term(PBWKey left, PBWKey right, GaussianRational coeff);

  const std::map<Key, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& key, const GaussianRational& coeff);
  TensorElement flipped() const;

  friend TensorElement operator+(const TensorElement& x, const TensorElement& y);
  friend TensorElement operator-(const TensorElement& x, const TensorElement& y);
  friend TensorElement operator*(const GaussianRational& s, const TensorElement& x);
  TensorElement& operator+=(const TensorElement& y) { *this = *this + y; return *this; }

  friend bool operator==(const TensorElement& x, const TensorElement& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const TensorElement& x, const TensorElement& y) { return !(x == y); }

 private:
  std::map<Key, GaussianRational> terms_;
};

class Suq2;

/// Linear functional on the algebra, evaluable monomial by monomial.
class DualFunctional {
 public:
  virtual ~DualFunctional() = default;
  virtual GaussianRational eval_monomial(const Suq2& algebra, const PBWKey& key) const = 0;
  GaussianRational eval(const Suq2& algebra, const AlgebraElement& x) const;
};

/// The multiplicative exponent functional f_z (half-integral z): kills beta
/// and gamma, sends alpha to q^{-z} and delta to q^{z}.
class ExponentFunctional final : public DualFunctional {
 public:
  explicit ExponentFunctional(HalfInt z) : z_(z) {}
  GaussianRational eval_monomial(const Suq2& algebra, const PBWKey& key) const override;

 private:
  HalfInt z_;
};

/// The counit as a functional.
class CounitFunctional final : public DualFunctional {
 public:
  GaussianRational eval_monomial(const Suq2& algebra, const PBWKey& key) const override;
};

/// The algebra at a fixed deformation parameter.  All operations are pure.
class Suq2 {
 public:
  explicit Suq2(QParameter param) : param_(std::move(param)) {}

  const QParameter& param() const { return param_; }
  Rational q() const { return param_.q(); }

  // Generators and constants.
  AlgebraElement one() const { return AlgebraElement::term({0, 0, 0}, GaussianRational(1)); }
  AlgebraElement scalar(const GaussianRational& v) const {
    return AlgebraElement::term({0, 0, 0}, v);
  }
  AlgebraElement gen_alpha() const { return AlgebraElement::term({1, 0, 0}, GaussianRational(1)); }
  AlgebraElement gen_beta() const { return AlgebraElement::term({0, 1, 0}, GaussianRational(1)); }
  AlgebraElement gen_gamma() const { return AlgebraElement::term({0, 0, 1}, GaussianRational(1)); }
  AlgebraElement gen_delta() const { return AlgebraElement::term({-1, 0, 0}, GaussianRational(1)); }

  /// The defining 2x2 corepresentation matrix [[alpha, beta], [gamma, delta]].
  std::vector<std::vector<AlgebraElement>> fundamental_corep() const;

  // Algebra structure.
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement multiply_monomials(const PBWKey& x, const PBWKey& y) const;
  AlgebraElement power(const AlgebraElement& x, int e) const;

  // Coalgebra and (anti)automorphisms.
  TensorElement comultiply(const AlgebraElement& x) const;
  TensorElement comultiply_monomial(const PBWKey& key) const;
  TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) const;
  GaussianRational counit(const AlgebraElement& x) const;
  AlgebraElement antipode(const AlgebraElement& x) const;
  AlgebraElement star(const AlgebraElement& x) const;
  AlgebraElement second_involution(const AlgebraElement& x) const;

  // The Haar functional: vanishes off the centrally supported monomials
  // (beta gamma)^n, with h((beta gamma)^n) = (-q)^n (1-q^2)/(1-q^{2n+2}).
  GaussianRational haar(const AlgebraElement& x) const;

  GaussianRational f_z(HalfInt z, const AlgebraElement& x) const;

  /// f.a = (id (x) f)(Delta a).
  AlgebraElement act_left(const DualFunctional& f, const AlgebraElement& x) const;
  /// a.f = (f (x) id)(Delta a).
  AlgebraElement act_right(const AlgebraElement& x, const DualFunctional& f) const;

  // U(1) quotient: alpha -> z, delta -> z^{-1}, beta, gamma -> 0.
  // The image of an element is a Laurent polynomial, kept as exponent -> coeff.
  std::map<int, GaussianRational> u1_image(const AlgebraElement& x) const;
  /// Applies the quotient map to the left (right) tensor leg; the result maps
  /// each z-exponent to the corresponding combination of right (left) legs.
  std::map<int, AlgebraElement> u1_collapse_left(const TensorElement& t) const;
  std::map<int, AlgebraElement> u1_collapse_right(const TensorElement& t) const;
  bool u1_biinvariant(const AlgebraElement& x) const;

  /// All PBW monomials of total degree <= cutoff, in key order.
  std::vector<PBWKey> basis_upto(int cutoff) const;

 private:
  QParameter param_;
};

std::string algebra_element_json(const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const std::string& text);

}  // namespace qgp
