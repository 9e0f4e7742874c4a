// Command-line entry point: every check the library implements, emitted as a
// deterministic JSON or CSV report.  Exit codes: 0 all assertions pass,
// 1 some mathematical assertion failed (witnesses in the report),
// 2 usage or parameter errors.

#include "qgp/hopf_checks.hpp"
#include "qgp/hypergroup.hpp"
#include "qgp/linearization.hpp"
#include "qgp/orthopoly.hpp"
#include "qgp/reports.hpp"
#include "qgp/suq2.hpp"
#include "qgp/uqsl2.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace qgp {
namespace {

enum class OutputFormat { kJson, kCsv };

struct CheckRequest {
  std::string check;
  std::string family = "little-q-legendre";
  std::string s = "1/2";
  std::string sigma = "0";
  int lmax = 6;
  int l = 1;
  int degree = 4;
  int pairs = 50;
  int two_l_max = 8;
  bool emit_table = false;
  OutputFormat format = OutputFormat::kJson;
};

std::string rational_or_full(const GaussianRational& c) {
  return c.is_real() ? c.re().str() : c.str();
}

OrthogonalFamily family_of(const CheckRequest& req) {
  return OrthogonalFamily::from_name(req.family, QParameter::from_string(req.s),
                                     HalfInt::from_string(req.sigma));
}

CheckReport run_linearize(const CheckRequest& req) {
  CheckReport report;
  report.check = "linearize";
  report.params["family"] = req.family;
  report.params["s"] = req.s;
  if (req.family == "askey-wilson-sym") report.params["sigma"] = req.sigma;
  report.params["lmax"] = std::to_string(req.lmax);

  const OrthogonalFamily family = family_of(req);
  nlohmann::json rows = nlohmann::json::array();
  std::string nonneg_witness, sum_witness;
  for (int l = 0; l <= req.lmax; ++l) {
    for (int m = 0; m <= req.lmax; ++m) {
      const LinearizationRow row = linearize_triangular(l, m, family);
      if (nonneg_witness.empty() && !row.all_nonnegative_real()) {
        for (const auto& [k, c] : row.coefficients)
          if (!c.is_real() || c.re().sign() < 0) {
            nonneg_witness = "(l,m,k)=(" + std::to_string(l) + "," + std::to_string(m) + "," +
                             std::to_string(k) + "), c=" + c.str();
            break;
          }
      }
      if (sum_witness.empty() && !row.sum().is_one())
        sum_witness = "(l,m)=(" + std::to_string(l) + "," + std::to_string(m) +
                      "), sum=" + row.sum().str();
      for (const auto& [k, c] : row.coefficients) {
        nlohmann::json jrow;
        jrow["l"] = l;
        jrow["m"] = m;
        jrow["k"] = k;
        jrow["c"] = rational_or_full(c);
        rows.push_back(jrow);
      }
    }
  }
  const std::string window = "rows l,m <= " + std::to_string(req.lmax);
  report.add(nonneg_witness.empty()
                 ? CheckItem::passed("coefficients-nonnegative-real", window)
                 : CheckItem::failed("coefficients-nonnegative-real", window, nonneg_witness));
  report.add(sum_witness.empty() ? CheckItem::passed("row-sums-one", window)
                                 : CheckItem::failed("row-sums-one", window, sum_witness));
  report.data = nlohmann::json{{"rows", rows}};
  return report;
}

std::string linearize_csv(const CheckReport& report) {
  std::ostringstream os;
  os << "l,m,k,c\n";
  for (const auto& row : report.data.at("rows"))
    os << row.at("l").get<int>() << "," << row.at("m").get<int>() << "," << row.at("k").get<int>()
       << "," << csv_escape(row.at("c").get<std::string>()) << "\n";
  return os.str();
}

CheckReport run_verify_hypergroup(const CheckRequest& req) {
  const OrthogonalFamily family = family_of(req);
  const DiscreteHypergroup h = from_linearization(family, req.lmax);
  CheckReport report = verify_axioms(h);
  report.params["family"] = req.family;
  report.params["s"] = req.s;
  if (req.family == "askey-wilson-sym") report.params["sigma"] = req.sigma;
  report.params["lmax"] = std::to_string(req.lmax);
  if (req.emit_table) report.data = h.to_json();
  return report;
}

CheckReport run_verify_hopf(const CheckRequest& req) {
  return verify_hopf(Suq2(QParameter::from_string(req.s)), req.degree);
}

CheckReport run_verify_involutions(const CheckRequest& req) {
  return verify_involutions(Suq2(QParameter::from_string(req.s)), req.degree, req.pairs);
}

CheckReport run_spherical_u1(const CheckRequest& req) {
  CheckReport report;
  report.check = "spherical-u1";
  report.params["s"] = req.s;
  report.params["l"] = std::to_string(req.l);

  const Suq2 algebra((QParameter::from_string(req.s)));
  const AlgebraElement sph = spherical_u1(algebra, req.l);
  report.add(CheckItem::passed("biinvariant-dimension-one", "spin " + std::to_string(req.l)));

  // Independent identity: the spherical element is the little q-Legendre
  // polynomial with base q^2 evaluated at gamma gamma^*.
  const AlgebraElement gg =
      algebra.multiply(algebra.gen_gamma(), algebra.star(algebra.gen_gamma()));
  const UniPoly poly = little_q_legendre(req.l, GaussianRational(algebra.param().q_pow(2)));
  const AlgebraElement image = evaluate_poly(algebra, poly, gg);
  report.add(image == sph
                 ? CheckItem::passed("little-q-legendre-match", "spin " + std::to_string(req.l))
                 : CheckItem::failed("little-q-legendre-match", "spin " + std::to_string(req.l),
                                     "polynomial image differs"));
  report.data = nlohmann::json{{"element", nlohmann::json::parse(algebra_element_json(sph))}};
  return report;
}

CheckReport run_spherical_j(const CheckRequest& req) {
  CheckReport report;
  report.check = "spherical-j";
  report.params["s"] = req.s;
  report.params["sigma"] = req.sigma;
  report.params["l"] = std::to_string(req.l);

  const Suq2 algebra((QParameter::from_string(req.s)));
  const AlgebraElement sph =
      spherical_coideal(algebra, req.l, HalfInt::from_string(req.sigma));
  const std::string window = "spin " + std::to_string(req.l) + ", sigma " + req.sigma;
  report.add(CheckItem::passed("invariant-dimension-one", window));
  report.add(CheckItem::passed("counit-normalized", window));
  report.add(CheckItem::passed("killed-by-coideal-both-sides", window));
  report.data = nlohmann::json{{"element", nlohmann::json::parse(algebra_element_json(sph))}};
  return report;
}

CheckReport run_gelfand_scan(const CheckRequest& req) {
  CheckReport report;
  report.check = "gelfand-scan";
  report.params["s"] = req.s;
  report.params["sigma"] = req.sigma;
  report.params["two-l-max"] = std::to_string(req.two_l_max);

  const QParameter qp = QParameter::from_string(req.s);
  const std::vector<int> dims = gelfand_scan(qp, HalfInt::from_string(req.sigma), req.two_l_max);
  std::string witness;
  for (size_t two_l = 0; two_l < dims.size(); ++two_l) {
    const int expected = (two_l % 2 == 0) ? 1 : 0;
    if (dims[two_l] != expected) {
      witness = "2l=" + std::to_string(two_l) + ": dim " + std::to_string(dims[two_l]) +
                ", expected " + std::to_string(expected);
      break;
    }
  }
  const std::string window = "2l = 0.." + std::to_string(req.two_l_max);
  report.add(witness.empty() ? CheckItem::passed("alternating-kernel-pattern", window)
                             : CheckItem::failed("alternating-kernel-pattern", window, witness));
  report.data = nlohmann::json{{"kernel-dimensions", dims}};
  return report;
}

std::string gelfand_csv(const CheckReport& report) {
  std::ostringstream os;
  os << "two_l,kernel_dim\n";
  const auto& dims = report.data.at("kernel-dimensions");
  for (size_t two_l = 0; two_l < dims.size(); ++two_l)
    os << two_l << "," << dims[two_l].get<int>() << "\n";
  return os.str();
}

CheckReport run_compare_aw(const CheckRequest& req) {
  CheckReport report;
  report.check = "compare-aw";
  report.params["s"] = req.s;
  report.params["sigma"] = req.sigma;
  report.params["l"] = std::to_string(req.l);

  const Suq2 algebra((QParameter::from_string(req.s)));
  const AwComparison cmp = compare_aw(algebra, req.l, HalfInt::from_string(req.sigma));
  const std::string window = "spin " + std::to_string(req.l) + ", sigma " + req.sigma;
  report.add(cmp.equal ? CheckItem::passed("askey-wilson-match", window)
                       : CheckItem::failed("askey-wilson-match", window,
                                           "normalized polynomial image differs"));
  report.add(is_positive_real(cmp.multiple)
                 ? CheckItem::passed("relating-multiple-positive", window)
                 : CheckItem::failed("relating-multiple-positive", window,
                                     "multiple = " + cmp.multiple.str()));
  report.data = nlohmann::json{{"multiple", cmp.multiple.str()}};
  return report;
}

CheckReport run_check(const CheckRequest& req) {
  if (req.check == "linearize") return run_linearize(req);
  if (req.check == "verify-hypergroup") return run_verify_hypergroup(req);
  if (req.check == "verify-hopf") return run_verify_hopf(req);
  if (req.check == "verify-involutions") return run_verify_involutions(req);
  if (req.check == "spherical-u1") return run_spherical_u1(req);
  if (req.check == "spherical-j") return run_spherical_j(req);
  if (req.check == "gelfand-scan") return run_gelfand_scan(req);
  if (req.check == "compare-aw") return run_compare_aw(req);
  throw std::invalid_argument("unknown check: " + req.check);
}

void emit_report(const CheckReport& report, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::kJson) {
    os << report.to_json_string();
    return;
  }
  if (report.check == "linearize") {
    os << linearize_csv(report);
    return;
  }
  if (report.check == "gelfand-scan") {
    os << gelfand_csv(report);
    return;
  }
  os << report.to_csv();
}

}  // namespace
}  // namespace qgp

int main(int argc, char** argv) {
  using qgp::CheckRequest;
  using qgp::OutputFormat;

  CLI::App app{"Exact verification suite for quantum-group hypergroups"};
  app.require_subcommand(1);
  CheckRequest req;

  std::string out = "json";
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--s", req.s, "deformation parameter s, a fraction in (0,1); q = s^2");
    cmd->add_option("--out", out, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* linearize = app.add_subcommand("linearize", "emit linearization coefficient rows");
  add_common(linearize);
  linearize->add_option("--family", req.family)
      ->check(CLI::IsMember({"little-q-legendre", "askey-wilson-sym"}));
  linearize->add_option("--sigma", req.sigma, "half-integer k/2");
  linearize->add_option("--lmax", req.lmax)->check(CLI::NonNegativeNumber);

  CLI::App* hyper = app.add_subcommand("verify-hypergroup", "build a truncated hypergroup and verify the axioms");
  add_common(hyper);
  hyper->add_option("--family", req.family)
      ->check(CLI::IsMember({"little-q-legendre", "askey-wilson-sym"}));
  hyper->add_option("--sigma", req.sigma, "half-integer k/2");
  hyper->add_option("--lmax", req.lmax, "truncation bound N")->check(CLI::NonNegativeNumber);
  hyper->add_flag("--emit-table", req.emit_table, "include the convolution table in the report");

  CLI::App* hopf = app.add_subcommand("verify-hopf", "verify the Hopf *-algebra axioms");
  add_common(hopf);
  hopf->add_option("--degree", req.degree)->check(CLI::NonNegativeNumber);

  CLI::App* invol = app.add_subcommand("verify-involutions", "verify the twisted-involution identities");
  add_common(invol);
  invol->add_option("--degree", req.degree)->check(CLI::NonNegativeNumber);
  invol->add_option("--pairs", req.pairs, "seeded sample pairs")->check(CLI::NonNegativeNumber);

  CLI::App* su1 = app.add_subcommand("spherical-u1", "circle-biinvariant spherical element");
  add_common(su1);
  su1->add_option("--l", req.l, "integer spin")->check(CLI::NonNegativeNumber);

  CLI::App* sj = app.add_subcommand("spherical-j", "coideal-biinvariant spherical element");
  add_common(sj);
  sj->add_option("--l", req.l, "integer spin")->check(CLI::NonNegativeNumber);
  sj->add_option("--sigma", req.sigma, "half-integer k/2");

  CLI::App* scan = app.add_subcommand("gelfand-scan", "kernel dimensions of the twisted primitive");
  add_common(scan);
  scan->add_option("--sigma", req.sigma, "half-integer k/2");
  scan->add_option("--two-l-max", req.two_l_max)->check(CLI::NonNegativeNumber);

  CLI::App* aw = app.add_subcommand("compare-aw", "compare the coideal spherical element with the Askey-Wilson member");
  add_common(aw);
  aw->add_option("--l", req.l, "integer spin")->check(CLI::NonNegativeNumber);
  aw->add_option("--sigma", req.sigma, "half-integer k/2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  req.check = app.get_subcommands().front()->get_name();
  const OutputFormat format = (out == "csv") ? OutputFormat::kCsv : OutputFormat::kJson;

  try {
    const qgp::CheckReport report = qgp::run_check(req);
    qgp::emit_report(report, format, std::cout);
    return report.all_pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // A mathematical construction refused to go through: report and fail.
    qgp::CheckReport report;
    report.check = req.check;
    report.add(qgp::CheckItem::failed("construction", "", e.what()));
    qgp::emit_report(report, format, std::cout);
    return 1;
  }
}
