#include "qgp/suq2.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace qgp {

std::string PBWKey::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, long e) {
    if (e == 0) return;
    if (!first) os << "*";
    os << name;
    if (e > 1) os << "^" << e;
    first = false;
  };
  emit("alpha", k > 0 ? k : 0);
  emit("delta", k < 0 ? -k : 0);
  emit("beta", m);
  emit("gamma", n);
  if (first) os << "1";
  return os.str();
}

AlgebraElement AlgebraElement::term(PBWKey key, GaussianRational coeff) {
  AlgebraElement x;
  x.add_term(key, coeff);
  return x;
}

int AlgebraElement::degree() const {
  int d = -1;
  for (const auto& [key, coeff] : terms_) d = std::max(d, key.degree());
  return d;
}

GaussianRational AlgebraElement::coeff(const PBWKey& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void AlgebraElement::add_term(const PBWKey& key, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement operator-(const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [key, coeff] : x.terms_) r.terms_.emplace(key, -coeff);
  return r;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r = x;
  for (const auto& [key, coeff] : y.terms_) r.add_term(key, coeff);
  return r;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return x + (-y); }

AlgebraElement operator*(const GaussianRational& s, const AlgebraElement& x) {
  AlgebraElement r;
  if (s.is_zero()) return r;
  for (const auto& [key, coeff] : x.terms_) r.terms_.emplace(key, s * coeff);
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) os << " + ";
    os << "(" << coeff.str() << ")*" << key.str();
    first = false;
  }
  return os.str();
}

TensorElement TensorElement::term(PBWKey left, PBWKey right, GaussianRational coeff) {
  TensorElement t;
  t.add_term({left, right}, coeff);
  return t;
}

void TensorElement::add_term(const Key& key, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::flipped() const {
  TensorElement r;
  for (const auto& [key, coeff] : terms_) r.add_term({key.second, key.first}, coeff);
  return r;
}

TensorElement operator+(const TensorElement& x, const TensorElement& y) {
  TensorElement r = x;
  for (const auto& [key, coeff] : y.terms_) r.add_term(key, coeff);
  return r;
}

TensorElement operator-(const TensorElement& x, const TensorElement& y) {
  return x + GaussianRational(-1) * y;
}

TensorElement operator*(const GaussianRational& s, const TensorElement& x) {
  TensorElement r;
  if (s.is_zero()) return r;
  for (const auto& [key, coeff] : x.terms_) r.add_term(key, s * coeff);
  return r;
}

GaussianRational DualFunctional::eval(const Suq2& algebra, const AlgebraElement& x) const {
  GaussianRational acc(0);
  for (const auto& [key, coeff] : x.terms()) acc += coeff * eval_monomial(algebra, key);
  return acc;
}

GaussianRational ExponentFunctional::eval_monomial(const Suq2& algebra, const PBWKey& key) const {
  if (key.m != 0 || key.n != 0) return GaussianRational(0);
  // f_z(alpha^k) = q^{-kz}, f_z(delta^j) = q^{jz}; uniformly s^{-k * 2z}.
  return GaussianRational(algebra.param().s_pow(-key.k * z_.twice));
}

GaussianRational CounitFunctional::eval_monomial(const Suq2&, const PBWKey& key) const {
  return (key.m == 0 && key.n == 0) ? GaussianRational(1) : GaussianRational(0);
}

std::vector<std::vector<AlgebraElement>> Suq2::fundamental_corep() const {
  return {{gen_alpha(), gen_beta()}, {gen_gamma(), gen_delta()}};
}

AlgebraElement Suq2::multiply_monomials(const PBWKey& x, const PBWKey& y) const {
  // Move the alpha/delta block of y left past beta^{x.m} gamma^{x.n}:
  // each of the m+n letters contributes s^{-2 y.k}.
  const GaussianRational commute(param_.s_pow(-2L * (x.m + x.n) * y.k));

  // Combine the power blocks.  Same-signed blocks concatenate; opposite signs
  // telescope through the unit relations, producing central (beta gamma)^a
  // corrections:
  //   alpha^k delta^j = alpha^{k-1} delta^{j-1} (1 + q^{2j-1} beta gamma)
  //   delta^j alpha^k = delta^{j-1} alpha^{k-1} (1 + q^{-(2k-1)} beta gamma)
  std::vector<Rational> central = {Rational(1)};  // coefficients over (beta gamma)^a
  if (x.k > 0 && y.k < 0) {
    const long j = -y.k;
    const long steps = std::min<long>(x.k, j);
    for (long t = 0; t < steps; ++t) {
      const Rational f = param_.s_pow(2 * (2 * (j - t) - 1));
      central.push_back(Rational(0));
      for (size_t a = central.size() - 1; a > 0; --a) central[a] += f * central[a - 1];
    }
  } else if (x.k < 0 && y.k > 0) {
    const long kk = y.k;
    const long steps = std::min<long>(-x.k, kk);
    for (long t = 0; t < steps; ++t) {
      const Rational f = param_.s_pow(-2 * (2 * (kk - t) - 1));
      central.push_back(Rational(0));
      for (size_t a = central.size() - 1; a > 0; --a) central[a] += f * central[a - 1];
    }
  }

  AlgebraElement r;
  for (size_t a = 0; a < central.size(); ++a) {
    if (central[a].is_zero()) continue;
    const PBWKey key{x.k + y.k, x.m + y.m + static_cast<int>(a), x.n + y.n + static_cast<int>(a)};
    r.add_term(key, commute * GaussianRational(central[a]));
  }
  return r;
}

AlgebraElement Suq2::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement r;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const GaussianRational c = cx * cy;
      const AlgebraElement product = multiply_monomials(kx, ky);
      for (const auto& [key, coeff] : product.terms()) r.add_term(key, c * coeff);
    }
  }
  return r;
}

AlgebraElement Suq2::power(const AlgebraElement& x, int e) const {
  if (e < 0) throw std::invalid_argument("Suq2::power: negative exponent");
  AlgebraElement acc = one();
  for (int i = 0; i < e; ++i) acc = multiply(acc, x);
  return acc;
}

TensorElement Suq2::tensor_multiply(const TensorElement& x, const TensorElement& y) const {
  TensorElement r;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const GaussianRational c = cx * cy;
      const AlgebraElement left = multiply_monomials(kx.first, ky.first);
      const AlgebraElement right = multiply_monomials(kx.second, ky.second);
      for (const auto& [kl, cl] : left.terms())
        for (const auto& [kr, cr] : right.terms()) r.add_term({kl, kr}, c * cl * cr);
    }
  }
  return r;
}

namespace {

enum class Gen { Alpha, Beta, Gamma, Delta };

std::vector<Gen> key_word(const PBWKey& key) {
  std::vector<Gen> word;
  word.reserve(static_cast<size_t>(key.degree()));
  for (long i = 0; i < (key.k > 0 ? key.k : -key.k); ++i)
    word.push_back(key.k > 0 ? Gen::Alpha : Gen::Delta);
  for (int i = 0; i < key.m; ++i) word.push_back(Gen::Beta);
  for (int i = 0; i < key.n; ++i) word.push_back(Gen::Gamma);
  return word;
}

}  // namespace

TensorElement Suq2::comultiply_monomial(const PBWKey& key) const {
  const PBWKey kone{0, 0, 0};
  // Generator table, matrix-style: Delta(u_ij) = sum_k u_ik (x) u_kj.
  const auto delta_of = [&](Gen g) -> TensorElement {
    switch (g) {
      case Gen::Alpha:
        return TensorElement::term({1, 0, 0}, {1, 0, 0}, GaussianRational(1)) +
               TensorElement::term({0, 1, 0}, {0, 0, 1}, GaussianRational(1));
      case Gen::Beta:
        return TensorElement::term({1, 0, 0}, {0, 1, 0}, GaussianRational(1)) +
               TensorElement::term({0, 1, 0}, {-1, 0, 0}, GaussianRational(1));
      case Gen::Gamma:
        return TensorElement::term({0, 0, 1}, {1, 0, 0}, GaussianRational(1)) +
               TensorElement::term({-1, 0, 0}, {0, 0, 1}, GaussianRational(1));
      case Gen::Delta:
        return TensorElement::term({0, 0, 1}, {0, 1, 0}, GaussianRational(1)) +
               TensorElement::term({-1, 0, 0}, {-1, 0, 0}, GaussianRational(1));
    }
    throw std::logic_error("unreachable");
  };

  TensorElement acc = TensorElement::term(kone, kone, GaussianRational(1));
  for (Gen g : key_word(key)) acc = tensor_multiply(acc, delta_of(g));
  return acc;
}

TensorElement Suq2::comultiply(const AlgebraElement& x) const {
  TensorElement r;
  for (const auto& [key, coeff] : x.terms()) r += coeff * comultiply_monomial(key);
  return r;
}

GaussianRational Suq2::counit(const AlgebraElement& x) const {
  GaussianRational acc(0);
  for (const auto& [key, coeff] : x.terms())
    if (key.m == 0 && key.n == 0) acc += coeff;
  return acc;
}

namespace {

struct GenImages {
  std::array<AlgebraElement, 4> image;  // indexed by Gen
  bool reverse_word;
  bool conjugate_coeff;
};

}  // namespace

static AlgebraElement apply_gen_map(const Suq2& algebra, const AlgebraElement& x,
                                    const GenImages& spec) {
  AlgebraElement r;
  for (const auto& [key, coeff] : x.terms()) {
    std::vector<Gen> word = key_word(key);
    if (spec.reverse_word) std::reverse(word.begin(), word.end());
    AlgebraElement acc = algebra.scalar(spec.conjugate_coeff ? coeff.conj() : coeff);
    for (Gen g : word) acc = algebra.multiply(acc, spec.image[static_cast<size_t>(g)]);
    r += acc;
  }
  return r;
}

AlgebraElement Suq2::antipode(const AlgebraElement& x) const {
  const GaussianRational q(this->q());
  GenImages spec{{gen_delta(), (GaussianRational(-1) / q) * gen_beta(), -q * gen_gamma(),
                  gen_alpha()},
                 /*reverse_word=*/true, /*conjugate_coeff=*/false};
  return apply_gen_map(*this, x, spec);
}

AlgebraElement Suq2::star(const AlgebraElement& x) const {
  const GaussianRational q(this->q());
  GenImages spec{{gen_delta(), -q * gen_gamma(), (GaussianRational(-1) / q) * gen_beta(),
                  gen_alpha()},
                 /*reverse_word=*/true, /*conjugate_coeff=*/true};
  return apply_gen_map(*this, x, spec);
}

AlgebraElement Suq2::second_involution(const AlgebraElement& x) const {
  GenImages spec{{gen_delta(), -gen_gamma(), -gen_beta(), gen_alpha()},
                 /*reverse_word=*/true, /*conjugate_coeff=*/true};
  return apply_gen_map(*this, x, spec);
}

GaussianRational Suq2::haar(const AlgebraElement& x) const {
  const Rational q2 = param_.q_pow(2);
  GaussianRational acc(0);
  for (const auto& [key, coeff] : x.terms()) {
    if (key.k != 0 || key.m != key.n) continue;
    const long n = key.m;
    // h((beta gamma)^n) = (-q)^n (1 - q^2) / (1 - q^{2n+2})
    const Rational value = pow(-param_.q(), n) * (Rational(1) - q2) /
                           (Rational(1) - param_.q_pow(2 * n + 2));
    acc += coeff * GaussianRational(value);
  }
  return acc;
}

GaussianRational Suq2::f_z(HalfInt z, const AlgebraElement& x) const {
  return ExponentFunctional(z).eval(*this, x);
}

AlgebraElement Suq2::act_left(const DualFunctional& f, const AlgebraElement& x) const {
  AlgebraElement r;
  const TensorElement dx = comultiply(x);
  for (const auto& [key, coeff] : dx.terms())
    r.add_term(key.first, coeff * f.eval_monomial(*this, key.second));
  return r;
}

AlgebraElement Suq2::act_right(const AlgebraElement& x, const DualFunctional& f) const {
  AlgebraElement r;
  const TensorElement dx = comultiply(x);
  for (const auto& [key, coeff] : dx.terms())
    r.add_term(key.second, coeff * f.eval_monomial(*this, key.first));
  return r;
}

std::map<int, GaussianRational> Suq2::u1_image(const AlgebraElement& x) const {
  std::map<int, GaussianRational> image;
  for (const auto& [key, coeff] : x.terms()) {
    if (key.m != 0 || key.n != 0) continue;
    auto [it, inserted] = image.emplace(static_cast<int>(key.k), coeff);
    if (!inserted) it->second += coeff;
  }
  for (auto it = image.begin(); it != image.end();)
    it = it->second.is_zero() ? image.erase(it) : std::next(it);
  return image;
}

std::map<int, AlgebraElement> Suq2::u1_collapse_left(const TensorElement& t) const {
  std::map<int, AlgebraElement> slices;
  for (const auto& [key, coeff] : t.terms()) {
    if (key.first.m != 0 || key.first.n != 0) continue;
    slices[static_cast<int>(key.first.k)].add_term(key.second, coeff);
  }
  for (auto it = slices.begin(); it != slices.end();)
    it = it->second.is_zero() ? slices.erase(it) : std::next(it);
  return slices;
}

std::map<int, AlgebraElement> Suq2::u1_collapse_right(const TensorElement& t) const {
  std::map<int, AlgebraElement> slices;
  for (const auto& [key, coeff] : t.terms()) {
    if (key.second.m != 0 || key.second.n != 0) continue;
    slices[static_cast<int>(key.second.k)].add_term(key.first, coeff);
  }
  for (auto it = slices.begin(); it != slices.end();)
    it = it->second.is_zero() ? slices.erase(it) : std::next(it);
  return slices;
}

bool Suq2::u1_biinvariant(const AlgebraElement& x) const {
  const TensorElement dx = comultiply(x);
  const auto check = [&](const std::map<int, AlgebraElement>& slices) {
    if (x.is_zero()) return slices.empty();
    return slices.size() == 1 && slices.begin()->first == 0 && slices.begin()->second == x;
  };
  return check(u1_collapse_left(dx)) && check(u1_collapse_right(dx));
}

std::vector<PBWKey> Suq2::basis_upto(int cutoff) const {
  std::vector<PBWKey> basis;
  for (long k = -cutoff; k <= cutoff; ++k) {
    const int rest = cutoff - static_cast<int>(k < 0 ? -k : k);
    for (int m = 0; m <= rest; ++m)
      for (int n = 0; n + m <= rest; ++n) basis.push_back({k, m, n});
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::string algebra_element_json(const AlgebraElement& x) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [key, coeff] : x.terms()) {
    nlohmann::json t;
    t["k"] = key.k;
    t["m"] = key.m;
    t["n"] = key.n;
    t["coeff"] = coeff.str();
    list.push_back(t);
  }
  return list.dump();
}

AlgebraElement algebra_element_from_json(const std::string& text) {
  const nlohmann::json list = nlohmann::json::parse(text);
  AlgebraElement x;
  for (const auto& t : list) {
    x.add_term({t.at("k").get<long>(), t.at("m").get<int>(), t.at("n").get<int>()},
               GaussianRational::from_string(t.at("coeff").get<std::string>()));
  }
  return x;
}

}  // namespace qgp
