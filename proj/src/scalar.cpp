#include "qgp/scalar.hpp"

#include <ostream>
#include <sstream>

namespace qgp {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  try {
    mpq_class v(text, 10);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
  }
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_.get_num() << "/" << v_.get_den();
  return os.str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& a, long e) {
  if (e == 0) return Rational(1);
  if (a.is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 raised to a negative power");
    return Rational(0);
  }
  mpz_class num = a.raw().get_num();
  mpz_class den = a.raw().get_den();
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
  mpq_class r = (e > 0) ? mpq_class(pn, pd) : mpq_class(pd, pn);
  r.canonicalize();
  return Rational(r);
}

GaussianRational GaussianRational::from_string(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) return GaussianRational(Rational::from_string(text));
  return GaussianRational(Rational::from_string(text.substr(0, bar)),
                          Rational::from_string(text.substr(bar + 1)));
}

std::string GaussianRational::str() const { return re_.str() + "|" + im_.str(); }

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  const Rational n2 = b.norm2();
  const GaussianRational bc = b.conj();
  return GaussianRational((a.re_ * bc.re_ - a.im_ * bc.im_) / n2,
                          (a.re_ * bc.im_ + a.im_ * bc.re_) / n2);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

GaussianRational pow(const GaussianRational& a, long e) {
  if (e == 0) return GaussianRational(1);
  if (a.is_zero()) {
    if (e < 0) throw std::domain_error("GaussianRational: 0 raised to a negative power");
    return GaussianRational(0);
  }
  if (a.is_real()) return GaussianRational(pow(a.re(), e));
  GaussianRational base = e > 0 ? a : GaussianRational(1) / a;
  long k = e > 0 ? e : -e;
  GaussianRational acc(1);
  while (k > 0) {  // binary powering
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

HalfInt HalfInt::from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return HalfInt(2 * std::stoi(text));
    if (text.substr(slash + 1) != "2")
      throw std::invalid_argument("denominator must be 2");
    return HalfInt(std::stoi(text.substr(0, slash)));
  } catch (const std::exception&) {
    throw std::invalid_argument("HalfInt: cannot parse \"" + text + "\" (want k or k/2)");
  }
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

QParameter::QParameter(Rational s) : s_(std::move(s)) {
  if (!(Rational(0) < s_ && s_ < Rational(1)))
    throw std::domain_error("QParameter: s must lie strictly between 0 and 1, got " + s_.str());
}

}  // namespace qgp
