#pragma once
/**
 * @file hypergroup.hpp
 * @brief Discrete hypergroups on a truncated index set {0..N}: the
 *        convolution table built from linearization rows, measure algebra
 *        operations, and the full axiom verifier.
 *
 * Axioms are asserted exactly, and only on windows where no intermediate
 * support escapes the truncation; the report states each window.
 */

#include "qgp/linearization.hpp"
#include "qgp/orthopoly.hpp"
#include "qgp/reports.hpp"
#include "qgp/scalar.hpp"

#include <json.hpp>

#include <map>
#include <utility>
#include <vector>

namespace qgp {

/// Finitely supported measure on {0, 1, 2, ...}; no stored zeros.
/// A probability measure additionally has real values >= 0 summing to 1.
class FiniteMeasure {
 public:
  FiniteMeasure() = default;
  static FiniteMeasure point(int x) { return FiniteMeasure({{x, GaussianRational(1)}}); }
  explicit FiniteMeasure(std::map<int, GaussianRational> values);

  const std::map<int, GaussianRational>& values() const { return v_; }
  bool is_zero() const { return v_.empty(); }
  GaussianRational at(int x) const;
  bool contains(int x) const { return v_.count(x) != 0; }
  int max_support() const { return v_.empty() ? -1 : v_.rbegin()->first; }
  void add(int x, const GaussianRational& c);

  GaussianRational total_mass() const;
  bool is_probability() const;

  friend FiniteMeasure operator+(const FiniteMeasure& a, const FiniteMeasure& b);
  friend FiniteMeasure operator*(const GaussianRational& s, const FiniteMeasure& a);
  friend bool operator==(const FiniteMeasure& a, const FiniteMeasure& b) { return a.v_ == b.v_; }
  friend bool operator!=(const FiniteMeasure& a, const FiniteMeasure& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<int, GaussianRational> v_;
};

/// Truncated convolution structure on {0..N}: a table of convolution
/// measures, an involutive permutation and a unit index.  The type admits
/// non-identity involutions and complex tables; the bundled families happen
/// to produce identity involutions with real entries.
struct DiscreteHypergroup {
  int truncation = 0;                                     // N
  int unit = 0;                                           // e
  std::vector<int> involution;                            // permutation of {0..N}
  std::map<std::pair<int, int>, FiniteMeasure> table;     // (l,m) -> p_l * p_m, exact

  const FiniteMeasure& row(int l, int m) const;
  int involve(int x) const;

  nlohmann::json to_json() const;
};

/// Builds the table from linearization rows of the family, for l, m <= N.
/// Both bundled families are self-conjugate: involution = identity, unit = 0.
DiscreteHypergroup from_linearization(const OrthogonalFamily& family, int truncation);

/// Bilinear extension of the table; supports must lie within {0..N}.
FiniteMeasure convolve(const DiscreteHypergroup& h, const FiniteMeasure& mu,
                       const FiniteMeasure& nu);

/// Pushforward along the involution with conjugated values.
FiniteMeasure involute_measure(const DiscreteHypergroup& h, const FiniteMeasure& mu);

/// Runs every hypergroup axiom on its largest truncation-safe window and
/// reports pass/fail with first counterexamples.
CheckReport verify_axioms(const DiscreteHypergroup& h);

}  // namespace qgp
