#include "qgp/hopf_checks.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace qgp {

StructureMaps StructureMaps::standard(const Suq2& algebra) {
  StructureMaps maps;
  maps.antipode = [&algebra](const AlgebraElement& x) { return algebra.antipode(x); };
  maps.star = [&algebra](const AlgebraElement& x) { return algebra.star(x); };
  maps.counit = [&algebra](const AlgebraElement& x) { return algebra.counit(x); };
  return maps;
}

std::uint64_t ElementSampler::next_word() {
  // splitmix64; fixed algorithm keeps reports identical across platforms
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

AlgebraElement ElementSampler::next(int max_degree, int max_terms) {
  const int terms = 1 + static_cast<int>(next_word() % static_cast<std::uint64_t>(max_terms));
  AlgebraElement x;
  for (int t = 0; t < terms; ++t) {
    const long k = static_cast<long>(next_word() % 5) - 2;
    const int abs_k = static_cast<int>(k < 0 ? -k : k);
    const int m = static_cast<int>(next_word() % 3);
    const int room = max_degree - abs_k - m;
    if (room < 0) continue;
    const int n = static_cast<int>(next_word() % static_cast<std::uint64_t>(std::min(room, 2) + 1));
    const long re_num = static_cast<long>(next_word() % 7) - 3;
    const long im_num = static_cast<long>(next_word() % 7) - 3;
    const long re_den = 1 + static_cast<long>(next_word() % 3);
    const long im_den = 1 + static_cast<long>(next_word() % 3);
    x.add_term({k, m, n},
               GaussianRational(Rational(re_num, re_den), Rational(im_num, im_den)));
  }
  if (x.is_zero()) x.add_term({0, 0, 0}, GaussianRational(1));
  return x;
}

namespace {

using Tensor3 = std::map<std::tuple<PBWKey, PBWKey, PBWKey>, GaussianRational>;

void tensor3_add(Tensor3& t, const std::tuple<PBWKey, PBWKey, PBWKey>& key,
                 const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Tensor3 expand_left(const Suq2& algebra, const TensorElement& t) {
  Tensor3 r;
  for (const auto& [key, c] : t.terms()) {
    const TensorElement dx = algebra.comultiply_monomial(key.first);
    for (const auto& [inner, d] : dx.terms())
      tensor3_add(r, {inner.first, inner.second, key.second}, c * d);
  }
  return r;
}

Tensor3 expand_right(const Suq2& algebra, const TensorElement& t) {
  Tensor3 r;
  for (const auto& [key, c] : t.terms()) {
    const TensorElement dx = algebra.comultiply_monomial(key.second);
    for (const auto& [inner, d] : dx.terms())
      tensor3_add(r, {key.first, inner.first, inner.second}, c * d);
  }
  return r;
}

// Applies an element-valued map to both legs.
TensorElement map_legs(const TensorElement& t,
                       const std::function<AlgebraElement(const AlgebraElement&)>& f,
                       bool conjugate_coeff) {
  TensorElement r;
  for (const auto& [key, c] : t.terms()) {
    const AlgebraElement left = f(AlgebraElement::term(key.first, GaussianRational(1)));
    const AlgebraElement right = f(AlgebraElement::term(key.second, GaussianRational(1)));
    const GaussianRational cc = conjugate_coeff ? c.conj() : c;
    for (const auto& [kl, cl] : left.terms())
      for (const auto& [kr, cr] : right.terms()) r.add_term({kl, kr}, cc * cl * cr);
  }
  return r;
}

std::string monomial_window(const std::vector<PBWKey>& basis, int cutoff) {
  return "monomials of degree <= " + std::to_string(cutoff) + " (" +
         std::to_string(basis.size()) + ")";
}

}  // namespace

CheckReport verify_hopf(const Suq2& algebra, int degree_cutoff, const StructureMaps* maps_in) {
  const StructureMaps maps = maps_in ? *maps_in : StructureMaps::standard(algebra);
  CheckReport report;
  report.check = "verify-hopf";
  report.params["degree"] = std::to_string(degree_cutoff);
  report.params["s"] = algebra.param().s().str();

  const std::vector<PBWKey> basis = algebra.basis_upto(degree_cutoff);
  const std::string window = monomial_window(basis, degree_cutoff);

  std::vector<std::pair<PBWKey, PBWKey>> pairs;
  for (const PBWKey& x : basis)
    for (const PBWKey& y : basis)
      if (x.degree() + y.degree() <= degree_cutoff) pairs.emplace_back(x, y);
  const std::string pair_window = "monomial pairs with total degree <= " +
                                  std::to_string(degree_cutoff) + " (" +
                                  std::to_string(pairs.size()) + ")";

  // Coassociativity.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const TensorElement dx = algebra.comultiply_monomial(key);
      if (expand_left(algebra, dx) != expand_right(algebra, dx)) {
        witness = key.str();
        break;
      }
    }
    report.add(witness.empty() ? CheckItem::passed("coassociativity", window)
                               : CheckItem::failed("coassociativity", window, witness));
  }

  // Counit laws (epsilon (x) id) Delta = id = (id (x) epsilon) Delta.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const AlgebraElement x = AlgebraElement::term(key, GaussianRational(1));
      AlgebraElement left, right;
      const TensorElement dx = algebra.comultiply_monomial(key);
      for (const auto& [kk, c] : dx.terms()) {
        left.add_term(kk.second,
                      c * maps.counit(AlgebraElement::term(kk.first, GaussianRational(1))));
        right.add_term(kk.first,
                       c * maps.counit(AlgebraElement::term(kk.second, GaussianRational(1))));
      }
      if (left != x || right != x) {
        witness = key.str();
        break;
      }
    }
    report.add(witness.empty() ? CheckItem::passed("counit-laws", window)
                               : CheckItem::failed("counit-laws", window, witness));
  }

  // Comultiplication and counit are unital algebra homomorphisms.
  {
    std::string witness;
    for (const auto& [kx, ky] : pairs) {
      const AlgebraElement x = AlgebraElement::term(kx, GaussianRational(1));
      const AlgebraElement y = AlgebraElement::term(ky, GaussianRational(1));
      const AlgebraElement xy = algebra.multiply(x, y);
      if (algebra.comultiply(xy) !=
          algebra.tensor_multiply(algebra.comultiply(x), algebra.comultiply(y))) {
        witness = kx.str() + " , " + ky.str() + " (comultiplication)";
        break;
      }
      if (maps.counit(xy) != maps.counit(x) * maps.counit(y)) {
        witness = kx.str() + " , " + ky.str() + " (counit)";
        break;
      }
    }
    report.add(witness.empty() ? CheckItem::passed("homomorphism-laws", pair_window)
                               : CheckItem::failed("homomorphism-laws", pair_window, witness));
  }

  // Both antipode laws: m (S (x) id) Delta = counit * 1 = m (id (x) S) Delta.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const AlgebraElement x = AlgebraElement::term(key, GaussianRational(1));
      const AlgebraElement target = maps.counit(x) * algebra.one();
      AlgebraElement left, right;
      const TensorElement dx = algebra.comultiply_monomial(key);
      for (const auto& [kk, c] : dx.terms()) {
        const AlgebraElement first = AlgebraElement::term(kk.first, GaussianRational(1));
        const AlgebraElement second = AlgebraElement::term(kk.second, GaussianRational(1));
        left += c * algebra.multiply(maps.antipode(first), second);
        right += c * algebra.multiply(first, maps.antipode(second));
      }
      if (left != target || right != target) {
        witness = key.str();
        break;
      }
    }
    report.add(witness.empty() ? CheckItem::passed("antipode-laws", window)
                               : CheckItem::failed("antipode-laws", window, witness));
  }

  // (S (x) S) Delta = flip Delta S.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const AlgebraElement x = AlgebraElement::term(key, GaussianRational(1));
      const TensorElement lhs =
          map_legs(algebra.comultiply_monomial(key), maps.antipode, /*conjugate_coeff=*/false);
      const TensorElement rhs = algebra.comultiply(maps.antipode(x)).flipped();
      if (lhs != rhs) {
        witness = key.str();
        break;
      }
    }
    report.add(witness.empty() ? CheckItem::passed("antipode-flip-compatibility", window)
                               : CheckItem::failed("antipode-flip-compatibility", window, witness));
  }

  // S * S * = id.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const AlgebraElement x = AlgebraElement::term(key, GaussianRational(1));
      if (maps.antipode(maps.star(maps.antipode(maps.star(x)))) != x) {
        witness = key.str();
        break;
      }
    }
    report.add(witness.empty() ? CheckItem::passed("star-antipode-involution", window)
                               : CheckItem::failed("star-antipode-involution", window, witness));
  }

  // Delta is a *-homomorphism.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const AlgebraElement x = AlgebraElement::term(key, GaussianRational(1));
      const TensorElement lhs = algebra.comultiply(maps.star(x));
      const TensorElement rhs =
          map_legs(algebra.comultiply_monomial(key), maps.star, /*conjugate_coeff=*/true);
      if (lhs != rhs) {
        witness = key.str();
        break;
      }
    }
    report.add(witness.empty()
                   ? CheckItem::passed("comultiplication-star-homomorphism", window)
                   : CheckItem::failed("comultiplication-star-homomorphism", window, witness));
  }

  return report;
}

CheckReport verify_involutions(const Suq2& algebra, int degree_cutoff, int pair_samples,
                               std::uint64_t seed) {
  CheckReport report;
  report.check = "verify-involutions";
  report.params["degree"] = std::to_string(degree_cutoff);
  report.params["pairs"] = std::to_string(pair_samples);
  report.params["s"] = algebra.param().s().str();

  const std::vector<PBWKey> basis = algebra.basis_upto(degree_cutoff);
  const std::string window = monomial_window(basis, degree_cutoff);

  const ExponentFunctional f_half(HalfInt(1)), f_minus_half(HalfInt(-1));
  const ExponentFunctional f_one(HalfInt(2)), f_minus_one(HalfInt(-2));

  // Second involution = half-twisted star.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const AlgebraElement x = AlgebraElement::term(key, GaussianRational(1));
      const AlgebraElement twisted =
          algebra.act_left(f_half, algebra.act_right(algebra.star(x), f_minus_half));
      if (algebra.second_involution(x) != twisted) {
        witness = key.str();
        break;
      }
    }
    report.add(witness.empty() ? CheckItem::passed("second-involution-twist", window)
                               : CheckItem::failed("second-involution-twist", window, witness));
  }

  // S^2 as a two-sided exponent twist.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const AlgebraElement x = AlgebraElement::term(key, GaussianRational(1));
      const AlgebraElement twisted =
          algebra.act_left(f_minus_one, algebra.act_right(x, f_one));
      if (algebra.antipode(algebra.antipode(x)) != twisted) {
        witness = key.str();
        break;
      }
    }
    report.add(witness.empty() ? CheckItem::passed("antipode-square-twist", window)
                               : CheckItem::failed("antipode-square-twist", window, witness));
  }

  // Haar functional trace property under the exponent twist, sampled.
  {
    std::string witness;
    ElementSampler sampler(seed);
    for (int i = 0; i < pair_samples; ++i) {
      const AlgebraElement a = sampler.next();
      const AlgebraElement b = sampler.next();
      const AlgebraElement twisted = algebra.act_left(f_one, algebra.act_right(a, f_one));
      if (algebra.haar(algebra.multiply(a, b)) !=
          algebra.haar(algebra.multiply(b, twisted))) {
        witness = "sample pair " + std::to_string(i);
        break;
      }
    }
    report.add(witness.empty()
                   ? CheckItem::passed("haar-twisted-trace",
                                       std::to_string(pair_samples) + " seeded pairs")
                   : CheckItem::failed("haar-twisted-trace",
                                       std::to_string(pair_samples) + " seeded pairs", witness));
  }

  // The exponent family is additive: f_z f_{z'} = f_{z + z'}.
  {
    std::string witness;
    for (const PBWKey& key : basis) {
      const TensorElement dx = algebra.comultiply_monomial(key);
      for (int zt = -4; zt <= 4 && witness.empty(); ++zt) {
        for (int wt = -4; wt <= 4 && witness.empty(); ++wt) {
          const ExponentFunctional fz{HalfInt(zt)}, fw{HalfInt(wt)};
          GaussianRational product(0);
          for (const auto& [kk, c] : dx.terms())
            product += c * fz.eval_monomial(algebra, kk.first) *
                       fw.eval_monomial(algebra, kk.second);
          const GaussianRational direct = ExponentFunctional(HalfInt(zt + wt))
                                              .eval_monomial(algebra, key);
          if (product != direct)
            witness = key.str() + " at 2z=" + std::to_string(zt) + ", 2z'=" + std::to_string(wt);
        }
      }
      if (!witness.empty()) break;
    }
    report.add(witness.empty()
                   ? CheckItem::passed("exponent-family-additive",
                                       window + ", half-integers |z|,|z'| <= 2")
                   : CheckItem::failed("exponent-family-additive",
                                       window + ", half-integers |z|,|z'| <= 2", witness));
  }

  // The twisted fundamental corep is unitary: S(t_ij) = (t_ji)^*.
  {
    const auto u = algebra.fundamental_corep();
    std::vector<std::vector<AlgebraElement>> twisted(2, std::vector<AlgebraElement>(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) twisted[i][j] = algebra.second_involution(u[i][j]);
    std::string witness;
    for (int i = 0; i < 2 && witness.empty(); ++i)
      for (int j = 0; j < 2 && witness.empty(); ++j)
        if (algebra.antipode(twisted[i][j]) != algebra.star(twisted[j][i]))
          witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
    report.add(witness.empty()
                   ? CheckItem::passed("twisted-corep-unitary", "2x2 fundamental corep")
                   : CheckItem::failed("twisted-corep-unitary", "2x2 fundamental corep", witness));
  }

  // The starred fundamental corep is *not* directly unitary (it is only
  // equivalent to a unitary one through the half twist); record that.
  {
    const auto u = algebra.fundamental_corep();
    bool some_entry_breaks = false;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (algebra.antipode(algebra.star(u[i][j])) != algebra.star(algebra.star(u[j][i])))
          some_entry_breaks = true;
    report.add(some_entry_breaks
                   ? CheckItem::passed("star-corep-unitary-only-up-to-equivalence",
                                       "2x2 fundamental corep")
                   : CheckItem::failed("star-corep-unitary-only-up-to-equivalence",
                                       "2x2 fundamental corep",
                                       "starred corep satisfied unitarity directly"));
  }

  return report;
}

}  // namespace qgp
