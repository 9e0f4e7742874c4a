#pragma once
/**
 * @file hopf_checks.hpp
 * @brief Executable verification of the Hopf *-algebra axioms and of the
 *        second-involution identities, exact on a degree-bounded basis.
 */

#include "qgp/reports.hpp"
#include "qgp/suq2.hpp"

#include <cstdint>
#include <functional>

namespace qgp {

/// Structure maps used by the axiom checks.  Overridable so that a corrupted
/// table demonstrably produces a failing report.
struct StructureMaps {
  std::function<AlgebraElement(const AlgebraElement&)> antipode;
  std::function<AlgebraElement(const AlgebraElement&)> star;
  std::function<GaussianRational(const AlgebraElement&)> counit;

  static StructureMaps standard(const Suq2& algebra);
};

/// Seed for the reproducible pseudo-random sampling used by the verifiers.
inline constexpr std::uint64_t kVerifierSeed = 0x51A2D5CEull;

/// Pseudo-random element with at most `max_terms` monomials of degree
/// <= `max_degree` and small Gaussian-rational coefficients.  Deterministic
/// for a fixed generator state.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed = kVerifierSeed) : state_(seed) {}
  AlgebraElement next(int max_degree = 4, int max_terms = 4);

 private:
  std::uint64_t next_word();
  std::uint64_t state_;
};

/// Coassociativity, counit laws, homomorphism properties, both antipode
/// laws, antipode/flip compatibility and the star axioms, checked on every
/// monomial (and monomial pair) of total degree <= degree_cutoff.
CheckReport verify_hopf(const Suq2& algebra, int degree_cutoff,
                        const StructureMaps* maps = nullptr);

/// The second involution against its twist expression, the square of the
/// antipode as a two-sided twist, the twisted trace property of the Haar
/// functional on seeded pairs, additivity of the exponent family, and
/// unitarity of the twisted fundamental corepresentation.
CheckReport verify_involutions(const Suq2& algebra, int degree_cutoff, int pair_samples = 50,
                               std::uint64_t seed = kVerifierSeed);

}  // namespace qgp
