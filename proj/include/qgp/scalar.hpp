#pragma once
/**
 * @file scalar.hpp
 * @brief Exact scalar arithmetic: rationals, Gaussian rationals, half-integers
 *        and the deformation parameter.
 *
 * Every coefficient in this library lives in Q(i, s), where s is a rational
 * in (0,1) and q = s^2.  Values are always reduced; there is no floating
 * point anywhere.  Serialization formats: "p/q" for rationals,
 * "re_p/re_q|im_p/im_q" for Gaussian rationals.
 */

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qgp {

/// Arbitrary-precision rational, always in lowest terms, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);

  /// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
  static Rational from_string(const std::string& text);

  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  /// Canonical "p/q" form, denominator always printed.
  std::string str() const;

  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;  // canonical: gcd(num, den) = 1, den > 0
};

/// a^e for integer e (e < 0 requires a != 0).
Rational pow(const Rational& a, long e);

/// Element of Q(i): re + i*im with rational parts.  Conjugation is an
/// involution; norm2() = re^2 + im^2 vanishes only at zero.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}  // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Parses "re_p/re_q|im_p/im_q"; a bare rational means imaginary part 0.
  static GaussianRational from_string(const std::string& text);
  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  /// Canonical "re_p/re_q|im_p/im_q" form.
  std::string str() const;

  friend GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(-a.re_, -a.im_);
  }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

  GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
  GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
  GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }
  GaussianRational& operator/=(const GaussianRational& b) { *this = *this / b; return *this; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  Rational re_, im_;
};

GaussianRational pow(const GaussianRational& a, long e);

/// True iff z is real and strictly positive.
inline bool is_positive_real(const GaussianRational& z) {
  return z.is_real() && z.re().sign() > 0;
}

/// Half-integer, stored as twice its value.  Used for spins, sigma and the
/// exponent family index z.
struct HalfInt {
  int twice = 0;

  HalfInt() = default;
  explicit HalfInt(int twice_value) : twice(twice_value) {}
  static HalfInt of_int(int n) { return HalfInt(2 * n); }
  /// Parses "k", "-k" or "k/2".
  static HalfInt from_string(const std::string& text);

  bool is_integer() const { return twice % 2 == 0; }
  int as_int() const {
    if (!is_integer()) throw std::domain_error("HalfInt: not an integer: " + str());
    return twice / 2;
  }
  std::string str() const;

  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
  friend HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
  friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
  friend bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
};

/// Deformation parameter: rational s in (0,1), q = s^2.  Integer powers of s
/// make every q^{z/2} with 2z integral exactly representable.
class QParameter {
 public:
  explicit QParameter(Rational s);
  static QParameter from_string(const std::string& text) {
    return QParameter(Rational::from_string(text));
  }

  const Rational& s() const { return s_; }
  Rational q() const { return s_ * s_; }

  /// s^k as a rational (k any integer).
  Rational s_pow(long k) const { return pow(s_, k); }
  /// q^k as a rational (k any integer).
  Rational q_pow(long k) const { return pow(s_, 2 * k); }
  /// q^z for half-integral z: q^{z} = s^{2z}.
  Rational q_pow(HalfInt z) const { return pow(s_, z.twice); }

 private:
  Rational s_;
};

}  // namespace qgp
