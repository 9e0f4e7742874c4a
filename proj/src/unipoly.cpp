#include "qgp/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qgp {

UniPoly UniPoly::monomial(int degree, GaussianRational a) {
  if (degree < 0) throw std::invalid_argument("UniPoly::monomial: negative degree");
  if (a.is_zero()) return UniPoly();
  std::vector<GaussianRational> c(static_cast<size_t>(degree) + 1, GaussianRational(0));
  c.back() = std::move(a);
  return UniPoly(std::move(c));
}

GaussianRational UniPoly::leading() const {
  if (c_.empty()) throw std::domain_error("UniPoly::leading: zero polynomial");
  return c_.back();
}

GaussianRational UniPoly::operator()(const GaussianRational& x0) const {
  GaussianRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

UniPoly operator-(const UniPoly& p) {
  std::vector<GaussianRational> c;
  c.reserve(p.c_.size());
  for (const auto& a : p.c_) c.push_back(-a);
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()), GaussianRational(0));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const GaussianRational& s, const UniPoly& p) {
  std::vector<GaussianRational> c;
  c.reserve(p.c_.size());
  for (const auto& a : p.c_) c.push_back(s * a);
  return UniPoly(std::move(c));
}

UniPoly operator/(const UniPoly& p, const GaussianRational& s) {
  if (s.is_zero()) throw std::domain_error("UniPoly: division by zero scalar");
  return (GaussianRational(1) / s) * p;
}

std::string UniPoly::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k) os << ",";
    os << "\"" << c_[k].str() << "\"";
  }
  os << "]";
  return os.str();
}

UniPoly poly_pow(const UniPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  UniPoly acc = UniPoly::constant(GaussianRational(1));
  for (int k = 0; k < e; ++k) acc *= p;
  return acc;
}

}  // namespace qgp
