#pragma once
/**
 * @file unipoly.hpp
 * @brief Dense univariate polynomials with exact Gaussian-rational
 *        coefficients.  Coefficient index = degree; the leading coefficient
 *        is nonzero unless the polynomial is zero (empty coefficient list).
 */

#include "qgp/scalar.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace qgp {

class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { trim(); }
  explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(GaussianRational a) { return UniPoly({std::move(a)}); }
  static UniPoly x() { return UniPoly({GaussianRational(0), GaussianRational(1)}); }
  static UniPoly monomial(int degree, GaussianRational a);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<GaussianRational>& coefficients() const { return c_; }
  GaussianRational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)]
                                                       : GaussianRational(0);
  }
  GaussianRational leading() const;

  GaussianRational operator()(const GaussianRational& x0) const;  // Horner

  friend UniPoly operator-(const UniPoly& p);
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const GaussianRational& s, const UniPoly& p);
  friend UniPoly operator/(const UniPoly& p, const GaussianRational& s);

  UniPoly& operator+=(const UniPoly& b) { *this = *this + b; return *this; }
  UniPoly& operator-=(const UniPoly& b) { *this = *this - b; return *this; }
  UniPoly& operator*=(const UniPoly& b) { *this = *this * b; return *this; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string str() const;  // JSON array of scalar strings, lowest degree first

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussianRational> c_;
};

UniPoly poly_pow(const UniPoly& p, int e);

}  // namespace qgp
