#include "qgp/hypergroup.hpp"

#include <sstream>
#include <stdexcept>

namespace qgp {

FiniteMeasure::FiniteMeasure(std::map<int, GaussianRational> values) : v_(std::move(values)) {
  for (auto it = v_.begin(); it != v_.end();)
    it = it->second.is_zero() ? v_.erase(it) : std::next(it);
}

GaussianRational FiniteMeasure::at(int x) const {
  const auto it = v_.find(x);
  return it == v_.end() ? GaussianRational(0) : it->second;
}

void FiniteMeasure::add(int x, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v_.emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v_.erase(it);
  }
}

GaussianRational FiniteMeasure::total_mass() const {
  GaussianRational acc(0);
  for (const auto& [x, c] : v_) acc += c;
  return acc;
}

bool FiniteMeasure::is_probability() const {
  for (const auto& [x, c] : v_)
    if (!c.is_real() || c.re().sign() < 0) return false;
  return total_mass().is_one();
}

FiniteMeasure operator+(const FiniteMeasure& a, const FiniteMeasure& b) {
  FiniteMeasure r = a;
  for (const auto& [x, c] : b.values()) r.add(x, c);
  return r;
}

FiniteMeasure operator*(const GaussianRational& s, const FiniteMeasure& a) {
  FiniteMeasure r;
  for (const auto& [x, c] : a.values()) r.add(x, s * c);
  return r;
}

std::string FiniteMeasure::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [x, c] : v_) {
    if (!first) os << ", ";
    os << x << ": " << c.str();
    first = false;
  }
  os << "}";
  return os.str();
}

const FiniteMeasure& DiscreteHypergroup::row(int l, int m) const {
  const auto it = table.find({l, m});
  if (it == table.end())
    throw std::out_of_range("DiscreteHypergroup: no table row (" + std::to_string(l) + "," +
                            std::to_string(m) + ")");
  return it->second;
}

int DiscreteHypergroup::involve(int x) const {
  if (x < 0 || x > truncation)
    throw std::out_of_range("DiscreteHypergroup: index " + std::to_string(x) + " out of range");
  return involution[static_cast<size_t>(x)];
}

nlohmann::json DiscreteHypergroup::to_json() const {
  nlohmann::json j;
  j["N"] = truncation;
  j["unit"] = unit;
  j["involution"] = involution;
  j["table"] = nlohmann::json::array();
  for (const auto& [lm, measure] : table) {
    nlohmann::json row;
    row["l"] = lm.first;
    row["m"] = lm.second;
    row["support"] = nlohmann::json::array();
    for (const auto& [k, c] : measure.values())
      row["support"].push_back(nlohmann::json::array({k, c.str()}));
    j["table"].push_back(row);
  }
  return j;
}

DiscreteHypergroup from_linearization(const OrthogonalFamily& family, int truncation) {
  if (truncation < 0) throw std::invalid_argument("from_linearization: negative truncation");
  DiscreteHypergroup h;
  h.truncation = truncation;
  h.unit = 0;
  h.involution.resize(static_cast<size_t>(truncation) + 1);
  for (int x = 0; x <= truncation; ++x) h.involution[static_cast<size_t>(x)] = x;
  for (int l = 0; l <= truncation; ++l) {
    for (int m = 0; m <= truncation; ++m) {
      const LinearizationRow row = linearize_triangular(l, m, family);
      h.table[{l, m}] = FiniteMeasure(row.coefficients);
    }
  }
  return h;
}

FiniteMeasure convolve(const DiscreteHypergroup& h, const FiniteMeasure& mu,
                       const FiniteMeasure& nu) {
  for (const auto& m : {&mu, &nu}) {
    if (!m->is_zero() && (m->values().begin()->first < 0 || m->max_support() > h.truncation))
      throw std::out_of_range("convolve: measure support escapes the truncation window");
  }
  FiniteMeasure r;
  for (const auto& [l, cl] : mu.values())
    for (const auto& [m, cm] : nu.values()) r = r + (cl * cm) * h.row(l, m);
  return r;
}

FiniteMeasure involute_measure(const DiscreteHypergroup& h, const FiniteMeasure& mu) {
  FiniteMeasure r;
  for (const auto& [x, c] : mu.values()) r.add(h.involve(x), c.conj());
  return r;
}

namespace {

std::string pair_witness(int l, int m, const std::string& detail) {
  return "(l,m)=(" + std::to_string(l) + "," + std::to_string(m) + "): " + detail;
}

}  // namespace

CheckReport verify_axioms(const DiscreteHypergroup& h) {
  CheckReport report;
  report.check = "verify-hypergroup";
  const int n = h.truncation;

  // Structural sanity of the involution before anything else.
  {
    bool ok = static_cast<int>(h.involution.size()) == n + 1;
    std::string witness;
    if (ok) {
      for (int x = 0; x <= n && ok; ++x) {
        const int y = h.involve(x);
        if (y < 0 || y > n || h.involve(y) != x) {
          ok = false;
          witness = "index " + std::to_string(x);
        }
      }
      if (ok && h.involve(h.unit) != h.unit) {
        ok = false;
        witness = "involution moves the unit";
      }
    } else {
      witness = "involution length mismatch";
    }
    report.add(ok ? CheckItem::passed("involution-involutive", "indices 0.." + std::to_string(n))
                  : CheckItem::failed("involution-involutive", "indices 0.." + std::to_string(n),
                                      witness));
  }

  // (H*) every table entry is a probability measure.
  {
    std::string witness;
    for (int l = 0; l <= n && witness.empty(); ++l) {
      for (int m = 0; m <= n && witness.empty(); ++m) {
        const FiniteMeasure& row = h.row(l, m);
        if (!row.is_probability())
          witness = pair_witness(l, m, "entry is not a probability measure, mass = " +
                                           row.total_mass().str());
      }
    }
    const std::string window = "all " + std::to_string((n + 1) * (n + 1)) + " table entries";
    report.add(witness.empty() ? CheckItem::passed("H*-probability-entries", window)
                               : CheckItem::failed("H*-probability-entries", window, witness));
  }

  // (H1) associativity on triples whose intermediate supports stay inside
  // the window: max support of p_b * p_c is b + c, so a + b + c <= N works.
  {
    std::string witness;
    long checked = 0;
    for (int a = 0; a <= n && witness.empty(); ++a) {
      for (int b = 0; a + b <= n && witness.empty(); ++b) {
        for (int c = 0; a + b + c <= n && witness.empty(); ++c) {
          if (h.row(b, c).max_support() > n || h.row(a, b).max_support() > n) continue;
          const FiniteMeasure left =
              convolve(h, FiniteMeasure::point(a), h.row(b, c));
          const FiniteMeasure right =
              convolve(h, h.row(a, b), FiniteMeasure::point(c));
          ++checked;
          if (left != right)
            witness = "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")";
        }
      }
    }
    const std::string window = "triples with a+b+c <= " + std::to_string(n) + " (" +
                               std::to_string(checked) + ")";
    report.add(witness.empty() ? CheckItem::passed("H1-associativity", window)
                               : CheckItem::failed("H1-associativity", window, witness));
  }

  // (H2) finite support: automatic for finitely supported tables; recorded.
  report.add(CheckItem::passed("H2-compact-support",
                               "all table entries finitely supported by construction"));

  // (H3) (p_l * p_m)^- = p_{m^-} * p_{l^-}, on pairs whose row support stays
  // inside the window (the involution is only defined there).
  {
    std::string witness;
    long checked = 0;
    for (int l = 0; l <= n && witness.empty(); ++l) {
      for (int m = 0; m <= n && witness.empty(); ++m) {
        if (h.row(l, m).max_support() > n ||
            h.row(h.involve(m), h.involve(l)).max_support() > n)
          continue;
        ++checked;
        if (involute_measure(h, h.row(l, m)) != h.row(h.involve(m), h.involve(l)))
          witness = pair_witness(l, m, "involuted row mismatch");
      }
    }
    const std::string window =
        "pairs with row support inside the window (" + std::to_string(checked) + ")";
    report.add(witness.empty() ? CheckItem::passed("H3-involution-antihomomorphism", window)
                               : CheckItem::failed("H3-involution-antihomomorphism", window,
                                                   witness));
  }

  // (H4) unit law.
  {
    std::string witness;
    for (int x = 0; x <= n && witness.empty(); ++x) {
      if (h.row(h.unit, x) != FiniteMeasure::point(x) ||
          h.row(x, h.unit) != FiniteMeasure::point(x))
        witness = "index " + std::to_string(x);
    }
    const std::string window = "all indices <= " + std::to_string(n);
    report.add(witness.empty() ? CheckItem::passed("H4-unit-law", window)
                               : CheckItem::failed("H4-unit-law", window, witness));
  }

  // (H5) the unit lies in supp(p_l * p_{m^-}) exactly when l = m.
  {
    std::string witness;
    for (int l = 0; l <= n && witness.empty(); ++l) {
      for (int m = 0; m <= n && witness.empty(); ++m) {
        const bool has_unit = h.row(l, h.involve(m)).contains(h.unit);
        if (has_unit != (l == m))
          witness = pair_witness(l, m, has_unit ? "unexpected unit mass" : "missing unit mass");
      }
    }
    const std::string window = "all pairs l,m <= " + std::to_string(n);
    report.add(witness.empty() ? CheckItem::passed("H5-unit-support", window)
                               : CheckItem::failed("H5-unit-support", window, witness));
  }

  // (H6) support continuity: trivial in the discrete topology; recorded.
  report.add(CheckItem::passed("H6-support-continuity", "discrete topology, trivially continuous"));

  return report;
}

}  // namespace qgp
