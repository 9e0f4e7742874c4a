#include "qgp/uqsl2.hpp"

#include "qgp/orthopoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgp {

DualWord DualWord::cartan(int z) {
  DualWord w;
  w.terms_.push_back({GaussianRational(1), {DualToken{DualToken::Kind::kCartan, z}}});
  return w;
}

DualWord DualWord::raising() {
  DualWord w;
  w.terms_.push_back({GaussianRational(1), {DualToken{DualToken::Kind::kRaise, 0}}});
  return w;
}

DualWord DualWord::lowering() {
  DualWord w;
  w.terms_.push_back({GaussianRational(1), {DualToken{DualToken::Kind::kLower, 0}}});
  return w;
}

DualWord DualWord::twisted_primitive(const QParameter& qp, HalfInt sigma) {
  const Rational kappa = (qp.s_pow(-sigma.twice) - qp.s_pow(sigma.twice)) /
                         (qp.s_pow(-2) - qp.s_pow(2));
  const GaussianRational i = GaussianRational::i();
  return i * raising() + (-i) * lowering() +
         GaussianRational(-kappa) * (cartan(1) + GaussianRational(-1) * cartan(-1));
}

DualWord operator+(const DualWord& f, const DualWord& g) {
  DualWord r = f;
  r.terms_.insert(r.terms_.end(), g.terms_.begin(), g.terms_.end());
  return r;
}

DualWord operator*(const GaussianRational& c, const DualWord& f) {
  DualWord r;
  if (c.is_zero()) return r;
  r.terms_ = f.terms_;
  for (auto& [coeff, word] : r.terms_) coeff = c * coeff;
  return r;
}

DualWord operator*(const DualWord& f, const DualWord& g) {
  DualWord r;
  for (const auto& [cf, wf] : f.terms_) {
    for (const auto& [cg, wg] : g.terms_) {
      std::vector<DualToken> word = wf;
      word.insert(word.end(), wg.begin(), wg.end());
      r.terms_.push_back({cf * cg, std::move(word)});
    }
  }
  return r;
}

namespace {

GaussianRational eval_token(const QParameter& qp, const DualToken& t, const PBWKey& key) {
  switch (t.kind) {
    case DualToken::Kind::kCartan:
      // cartan(z)(alpha^k) = s^{zk}, cartan(z)(delta^j) = s^{-zj}
      return (key.m == 0 && key.n == 0) ? GaussianRational(qp.s_pow(t.z * key.k))
                                        : GaussianRational(0);
    case DualToken::Kind::kRaise:
      return (key.m == 1 && key.n == 0) ? GaussianRational(qp.s_pow(key.k)) : GaussianRational(0);
    case DualToken::Kind::kLower:
      return (key.m == 0 && key.n == 1) ? GaussianRational(qp.s_pow(key.k)) : GaussianRational(0);
  }
  throw std::logic_error("unreachable");
}

GaussianRational eval_word(const Suq2& algebra, const DualToken* word, size_t length,
                           const PBWKey& key) {
  if (length == 0) return (key.m == 0 && key.n == 0) ? GaussianRational(1) : GaussianRational(0);
  if (length == 1) return eval_token(algebra.param(), word[0], key);
  // (t w)(x) = (t (x) w)(Delta x)
  GaussianRational acc(0);
  const TensorElement dx = algebra.comultiply_monomial(key);
  for (const auto& [kk, c] : dx.terms()) {
    const GaussianRational head = eval_token(algebra.param(), word[0], kk.first);
    if (head.is_zero()) continue;
    acc += c * head * eval_word(algebra, word + 1, length - 1, kk.second);
  }
  return acc;
}

}  // namespace

GaussianRational DualWord::eval_monomial(const Suq2& algebra, const PBWKey& key) const {
  GaussianRational acc(0);
  for (const auto& [coeff, word] : terms_)
    acc += coeff * eval_word(algebra, word.data(), word.size(), key);
  return acc;
}

// ---------------------------------------------------------------------------
// Weight representations through tensor powers of the defining one.

namespace {

using SparseVec = std::map<unsigned, GaussianRational>;

int slot_weight(unsigned idx, int slot) { return (idx >> slot) & 1u ? -1 : 1; }

SparseVec apply_cartan(const QParameter& qp, int slots, const SparseVec& v, int z) {
  SparseVec r;
  for (const auto& [idx, c] : v) {
    int weight = 0;
    for (int i = 0; i < slots; ++i) weight += slot_weight(idx, i);
    r[idx] = c * GaussianRational(qp.s_pow(static_cast<long>(z) * weight));
  }
  return r;
}

void sparse_add(SparseVec& v, unsigned idx, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

// raise flips one bottom slot to top, with cartan factors on earlier slots
// and inverse-cartan factors on later ones; lower is the mirror image.
SparseVec apply_ladder(const QParameter& qp, int slots, const SparseVec& v, bool raise) {
  SparseVec r;
  for (const auto& [idx, c] : v) {
    for (int i = 0; i < slots; ++i) {
      const bool bottom = ((idx >> i) & 1u) != 0;
      if (raise != bottom) continue;  // raise acts on bottom slots, lower on top slots
      long exponent = 0;
      for (int j = 0; j < i; ++j) exponent += slot_weight(idx, j);
      for (int j = i + 1; j < slots; ++j) exponent -= slot_weight(idx, j);
      sparse_add(r, idx ^ (1u << i), c * GaussianRational(qp.s_pow(exponent)));
    }
  }
  return r;
}

bool proportional(const SparseVec& u, const SparseVec& target, GaussianRational* factor) {
  if (target.empty()) return u.empty();
  const auto& [idx0, t0] = *target.begin();
  const auto it = u.find(idx0);
  const GaussianRational lambda = (it == u.end()) ? GaussianRational(0) : it->second / t0;
  SparseVec scaled;
  for (const auto& [idx, c] : target) sparse_add(scaled, idx, lambda * c);
  if (scaled != u) return false;
  *factor = lambda;
  return true;
}

Vec dense_of(const SparseVec& v, Eigen::Index dim) {
  Vec d = Vec::Constant(dim, GaussianRational(0));
  for (const auto& [idx, c] : v) d(static_cast<Eigen::Index>(idx)) = c;
  return d;
}

}  // namespace

WeightRep build_rep(const QParameter& qp, HalfInt l) {
  if (l.twice < 0) throw std::invalid_argument("build_rep: negative spin");
  if (l.twice > 24) throw std::invalid_argument("build_rep: spin too large for tensor extraction");
  const int two_l = l.twice;
  const Eigen::Index dim = two_l + 1;

  WeightRep rep{l, zero_matrix(dim, dim), zero_matrix(dim, dim), zero_matrix(dim, dim)};
  for (Eigen::Index k = 0; k < dim; ++k)
    rep.cartan(k, k) = GaussianRational(qp.s_pow(two_l - 2 * k));

  if (two_l == 0) return rep;

  const int slots = two_l;
  std::vector<SparseVec> w(static_cast<size_t>(dim));
  w[0] = SparseVec{{0u, GaussianRational(1)}};
  for (int k = 0; k < two_l; ++k) {
    w[static_cast<size_t>(k) + 1] = apply_ladder(qp, slots, w[static_cast<size_t>(k)], false);
    if (w[static_cast<size_t>(k) + 1].empty())
      throw std::logic_error("build_rep: lowering chain terminated early");
    rep.lower(k + 1, k) = GaussianRational(1);
  }
  if (!apply_ladder(qp, slots, w[static_cast<size_t>(two_l)], false).empty())
    throw std::logic_error("build_rep: lowering chain overruns the block");

  for (int k = 0; k <= two_l; ++k) {
    // cartan eigenvector check
    GaussianRational factor;
    if (!proportional(apply_cartan(qp, slots, w[static_cast<size_t>(k)], 1),
                      w[static_cast<size_t>(k)], &factor) ||
        factor != rep.cartan(k, k))
      throw std::logic_error("build_rep: weight-basis vector is not a cartan eigenvector");

    const SparseVec raised = apply_ladder(qp, slots, w[static_cast<size_t>(k)], true);
    if (k == 0) {
      if (!raised.empty()) throw std::logic_error("build_rep: top vector is not highest weight");
      continue;
    }
    if (!proportional(raised, w[static_cast<size_t>(k) - 1], &factor))
      throw std::logic_error("build_rep: raising does not stay in the extracted block");
    rep.raise(k - 1, k) = factor;
  }

  // Defining relations, exactly.
  const GaussianRational q(qp.q());
  if (rep.cartan * rep.raise != q * (rep.raise * rep.cartan))
    throw std::logic_error("build_rep: cartan-raise relation fails");
  if (q * (rep.cartan * rep.lower) != rep.lower * rep.cartan)
    throw std::logic_error("build_rep: cartan-lower relation fails");
  const Mat cartan2 = rep.cartan * rep.cartan;
  const Mat commutator = rep.raise * rep.lower - rep.lower * rep.raise;
  const GaussianRational denom = q - GaussianRational(1) / q;
  if (denom * commutator != cartan2 - diagonal_inverse(cartan2))
    throw std::logic_error("build_rep: ladder commutator relation fails");

  return rep;
}

Mat f_matrix(const QParameter& qp, HalfInt l) {
  if (l.twice < 0) throw std::invalid_argument("f_matrix: negative spin");
  const Eigen::Index dim = l.twice + 1;
  Mat f = zero_matrix(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k)
    f(k, k) = GaussianRational(qp.s_pow(-2 * (l.twice - 2 * k)));
  return f;
}

Mat x_sigma_matrix(const QParameter& qp, HalfInt l, HalfInt sigma) {
  const WeightRep rep = build_rep(qp, l);
  const Rational kappa = (qp.s_pow(-sigma.twice) - qp.s_pow(sigma.twice)) /
                         (qp.s_pow(-2) - qp.s_pow(2));
  const GaussianRational i = GaussianRational::i();
  return i * rep.raise - i * rep.lower -
         GaussianRational(kappa) * (rep.cartan - diagonal_inverse(rep.cartan));
}

std::vector<Vec> invariant_vectors(const QParameter& qp, HalfInt l, HalfInt sigma) {
  return kernel_basis(x_sigma_matrix(qp, l, sigma));
}

std::vector<int> gelfand_scan(const QParameter& qp, HalfInt sigma, int two_l_max) {
  std::vector<int> dims;
  for (int two_l = 0; two_l <= two_l_max; ++two_l)
    dims.push_back(static_cast<int>(invariant_vectors(qp, HalfInt(two_l), sigma).size()));
  return dims;
}

// ---------------------------------------------------------------------------
// Corepresentation matrices.

CorepMatrix build_corep(const Suq2& algebra, HalfInt l, int two_l_bound) {
  if (l.twice < 0) throw std::invalid_argument("build_corep: negative spin");
  if (l.twice > two_l_bound)
    throw std::invalid_argument("build_corep: spin exceeds the configured bound 2l <= " +
                                std::to_string(two_l_bound));
  const QParameter& qp = algebra.param();
  const int two_l = l.twice;
  const int dim = two_l + 1;

  CorepMatrix corep{l, {}};
  corep.t.assign(static_cast<size_t>(dim), std::vector<AlgebraElement>(static_cast<size_t>(dim)));

  if (two_l == 0) {
    corep.t[0][0] = algebra.one();
    return corep;
  }

  const WeightRep rep = build_rep(qp, l);
  const Eigen::Index tdim = Eigen::Index(1) << two_l;

  // Tensor-power corep entries T[a][b] = prod_slots u[a_i][b_i].
  const auto u = algebra.fundamental_corep();
  std::vector<std::vector<AlgebraElement>> tensor_entries(
      static_cast<size_t>(tdim), std::vector<AlgebraElement>(static_cast<size_t>(tdim)));
  for (Eigen::Index a = 0; a < tdim; ++a) {
    for (Eigen::Index b = 0; b < tdim; ++b) {
      AlgebraElement entry = algebra.one();
      for (int i = 0; i < two_l; ++i) {
        const size_t ai = (static_cast<unsigned>(a) >> i) & 1u;
        const size_t bi = (static_cast<unsigned>(b) >> i) & 1u;
        entry = algebra.multiply(entry, u[ai][bi]);
      }
      tensor_entries[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(entry);
    }
  }

  // Dense images of the three generators on the tensor power.
  Mat cartan_t = zero_matrix(tdim, tdim), raise_t = zero_matrix(tdim, tdim),
      lower_t = zero_matrix(tdim, tdim);
  for (Eigen::Index b = 0; b < tdim; ++b) {
    const SparseVec e{{static_cast<unsigned>(b), GaussianRational(1)}};
    for (const auto& [idx, c] : apply_cartan(qp, two_l, e, 1))
      cartan_t(static_cast<Eigen::Index>(idx), b) = c;
    for (const auto& [idx, c] : apply_ladder(qp, two_l, e, true))
      raise_t(static_cast<Eigen::Index>(idx), b) = c;
    for (const auto& [idx, c] : apply_ladder(qp, two_l, e, false))
      lower_t(static_cast<Eigen::Index>(idx), b) = c;
  }

  // Embedding W: column k is the lowering chain vector w_k.
  Mat embed = zero_matrix(tdim, dim);
  {
    SparseVec wk{{0u, GaussianRational(1)}};
    for (int k = 0; k <= two_l; ++k) {
      for (const auto& [idx, c] : wk) embed(static_cast<Eigen::Index>(idx), k) = c;
      if (k < two_l) wk = apply_ladder(qp, two_l, wk, false);
    }
  }

  // Left inverse W' intertwining the generator images: row 0 is dual to the
  // one-dimensional top weight space, the rest follow from the raising
  // recursion r_k raise_t = raise(k, k+1) r_{k+1}.
  Mat project = zero_matrix(dim, tdim);
  project(0, 0) = GaussianRational(1);
  for (int k = 0; k + 1 <= two_l; ++k) {
    const GaussianRational pivot = rep.raise(k, k + 1);
    if (pivot.is_zero()) throw std::logic_error("build_corep: intertwiner solve singular");
    const RowVec next = project.row(k) * raise_t;
    project.row(k + 1) = (GaussianRational(1) / pivot) * next;
  }
  {
    const RowVec tail = project.row(two_l) * raise_t;
    for (Eigen::Index a = 0; a < tdim; ++a)
      if (!tail(a).is_zero()) throw std::logic_error("build_corep: projection does not intertwine");
    for (int k = 0; k <= two_l; ++k) {
      const RowVec via_cartan = project.row(k) * cartan_t;
      const RowVec via_lower = project.row(k) * lower_t;
      for (Eigen::Index a = 0; a < tdim; ++a) {
        if (via_cartan(a) != rep.cartan(k, k) * project(k, a))
          throw std::logic_error("build_corep: projection does not intertwine cartan");
        const GaussianRational expected =
            (k >= 1) ? project(k - 1, a) : GaussianRational(0);
        if (via_lower(a) != expected)
          throw std::logic_error("build_corep: projection does not intertwine lowering");
      }
    }
    const Mat gram = project * embed;
    if (gram != identity_matrix(dim))
      throw std::logic_error("build_corep: projection is not a left inverse of the embedding");
  }

  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      AlgebraElement entry;
      for (Eigen::Index a = 0; a < tdim; ++a) {
        if (project(i, a).is_zero()) continue;
        for (Eigen::Index b = 0; b < tdim; ++b) {
          if (embed(b, j).is_zero()) continue;
          entry += (project(i, a) * embed(b, j)) *
                   tensor_entries[static_cast<size_t>(a)][static_cast<size_t>(b)];
        }
      }
      corep.t[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(entry);
    }
  }

  // Corepresentation laws and generator duality, exactly.
  const DualWord gens[3] = {DualWord::cartan(1), DualWord::raising(), DualWord::lowering()};
  const Mat* images[3] = {&rep.cartan, &rep.raise, &rep.lower};
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const AlgebraElement& entry = corep.t[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const GaussianRational eps = algebra.counit(entry);
      if (eps != (i == j ? GaussianRational(1) : GaussianRational(0)))
        throw std::logic_error("build_corep: counit law fails");
      TensorElement expected;
      for (int k = 0; k < dim; ++k) {
        const AlgebraElement& left = corep.t[static_cast<size_t>(i)][static_cast<size_t>(k)];
        const AlgebraElement& right = corep.t[static_cast<size_t>(k)][static_cast<size_t>(j)];
        for (const auto& [ka, ca] : left.terms())
          for (const auto& [kb, cb] : right.terms()) expected.add_term({ka, kb}, ca * cb);
      }
      if (algebra.comultiply(entry) != expected)
        throw std::logic_error("build_corep: comultiplication law fails");
      for (int g = 0; g < 3; ++g) {
        if (gens[g].eval(algebra, entry) != (*images[g])(i, j))
          throw std::logic_error("build_corep: generator duality fails");
      }
    }
  }

  return corep;
}

// ---------------------------------------------------------------------------
// Spherical elements.

namespace {

AlgebraElement combine_corep(const CorepMatrix& corep, const Vec& coeffs) {
  AlgebraElement a;
  const int dim = corep.dim();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const GaussianRational& c = coeffs(i * dim + j);
      if (!c.is_zero())
        a += c * corep.t[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  return a;
}

}  // namespace

AlgebraElement spherical_u1(const Suq2& algebra, int l, int two_l_bound) {
  if (l < 0) throw std::invalid_argument("spherical_u1: negative spin");
  const CorepMatrix corep = build_corep(algebra, HalfInt::of_int(l), two_l_bound);
  const int dim = corep.dim();
  const int unknowns = dim * dim;

  // Biinvariance under the circle quotient, as one homogeneous system over
  // the coefficients: both collapsed legs must equal the weight-zero copy.
  struct Coord {
    int side;  // 0 = left, 1 = right
    int weight;
    PBWKey key;
    auto operator<=>(const Coord&) const = default;
  };
  std::map<Coord, std::map<int, GaussianRational>> equations;  // coord -> column -> value
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const int column = i * dim + j;
      const AlgebraElement& entry = corep.t[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const TensorElement dx = algebra.comultiply(entry);
      for (int side = 0; side < 2; ++side) {
        auto slices = side == 0 ? algebra.u1_collapse_left(dx) : algebra.u1_collapse_right(dx);
        auto& zero_slice = slices[0];
        zero_slice -= entry;  // target: weight-zero slice equals the element itself
        for (const auto& [weight, element] : slices)
          for (const auto& [key, c] : element.terms())
            equations[{side, weight, key}][column] += c;
      }
    }
  }

  Mat system = zero_matrix(static_cast<Eigen::Index>(equations.size()), unknowns);
  Eigen::Index row = 0;
  for (const auto& [coord, cols] : equations) {
    for (const auto& [column, value] : cols) system(row, column) = value;
    ++row;
  }

  const std::vector<Vec> kernel = kernel_basis(system);
  if (kernel.size() != 1)
    throw std::domain_error("spherical_u1: biinvariant space has dimension " +
                            std::to_string(kernel.size()) + ", expected 1");
  AlgebraElement a = combine_corep(corep, kernel[0]);
  const GaussianRational eps = algebra.counit(a);
  if (eps.is_zero()) throw std::domain_error("spherical_u1: counit-degenerate solution");
  a = (GaussianRational(1) / eps) * a;
  if (!algebra.u1_biinvariant(a))
    throw std::logic_error("spherical_u1: solution fails the direct biinvariance check");
  return a;
}

AlgebraElement spherical_coideal(const Suq2& algebra, int l, HalfInt sigma, int two_l_bound) {
  if (l < 0) throw std::invalid_argument("spherical_coideal: negative spin");
  const QParameter& qp = algebra.param();
  const HalfInt spin = HalfInt::of_int(l);
  const Mat x = x_sigma_matrix(qp, spin, sigma);

  const std::vector<Vec> right = kernel_basis(x);
  const std::vector<Vec> left = kernel_basis(Mat(x.transpose()));
  if (right.size() != 1 || left.size() != 1)
    throw std::domain_error("spherical_coideal: invariant space has dimension " +
                            std::to_string(right.size()) + "/" + std::to_string(left.size()) +
                            ", expected 1/1");

  const Vec& v = right[0];
  const Vec& w = left[0];
  GaussianRational tr(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) tr += w(i) * v(i);
  if (tr.is_zero()) throw std::domain_error("spherical_coideal: counit-degenerate solution");

  const CorepMatrix corep = build_corep(algebra, spin, two_l_bound);
  const int dim = corep.dim();
  AlgebraElement a;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const GaussianRational c = w(i) * v(j) / tr;
      if (!c.is_zero()) a += c * corep.t[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

  if (!algebra.counit(a).is_one())
    throw std::logic_error("spherical_coideal: counit normalization failed");
  const DualWord xw = DualWord::twisted_primitive(qp, sigma);
  if (!algebra.act_left(xw, a).is_zero() || !algebra.act_right(a, xw).is_zero())
    throw std::logic_error("spherical_coideal: solution is not coideal-biinvariant");
  return a;
}

AlgebraElement spherical_argument(const Suq2& algebra, HalfInt sigma) {
  const QParameter& qp = algebra.param();
  const Rational gap = qp.s_pow(-sigma.twice) - qp.s_pow(sigma.twice);  // q^{-sigma} - q^{sigma}
  const GaussianRational half(Rational(1, 2));

  const AlgebraElement a = algebra.gen_alpha(), b = algebra.gen_beta(),
                       c = algebra.gen_gamma(), d = algebra.gen_delta();
  AlgebraElement squares = algebra.multiply(a, a) + algebra.multiply(b, b) +
                           algebra.multiply(c, c) + algebra.multiply(d, d);
  AlgebraElement cross = algebra.multiply(d, c) + algebra.multiply(b, a) -
                         algebra.multiply(d, b) - algebra.multiply(c, a);
  const GaussianRational cross_scale =
      half * GaussianRational::i() * GaussianRational(qp.s()) * GaussianRational(gap);
  const GaussianRational central_scale = half * GaussianRational(gap * gap);
  return half * squares + cross_scale * cross +
         central_scale * algebra.multiply(b, c);
}

AlgebraElement evaluate_poly(const Suq2& algebra, const UniPoly& p, const AlgebraElement& x) {
  AlgebraElement acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = algebra.multiply(acc, x);
    acc += p.coeff(k) * algebra.one();
  }
  return acc;
}

AwComparison compare_aw(const Suq2& algebra, int l, HalfInt sigma, int two_l_bound) {
  const QParameter& qp = algebra.param();
  const AlgebraElement sph = spherical_coideal(algebra, l, sigma, two_l_bound);

  const GaussianRational a(-qp.s_pow(2L * (sigma.twice + 1)));  // -q^{2 sigma + 1}
  const GaussianRational c(qp.q());
  const GaussianRational base(qp.q_pow(2));
  const UniPoly raw = askey_wilson(l, a, a, c, c, base);

  const GaussianRational value = raw(GaussianRational(1));
  if (value.is_zero())
    throw std::domain_error("compare_aw: polynomial vanishes at the normalization point");
  const UniPoly normalized = raw / value;
  const AlgebraElement image = evaluate_poly(algebra, normalized, spherical_argument(algebra, sigma));

  return {image == sph, value};
}

}  // namespace qgp
