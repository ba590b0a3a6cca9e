#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "monofock/binomial.hpp"
#include "monofock/errors.hpp"
#include "monofock/measure.hpp"
#include "monofock/numeric.hpp"
#include "monofock/plot.hpp"
#include "monofock/polynomial.hpp"
#include "monofock/spectral.hpp"
#include "monofock/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitUsage = 2;

int binomial_cap() {
  if (const char* env = std::getenv("MONOFOCK_CAP_N")) {
    int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  return 24;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw monofock::Error("cannot open output file: " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace monofock;

  CLI::App app{"monotone Fock position-operator toolkit"};
  app.require_subcommand(1);
  // let --precision-bits / --out appear after the subcommand name too
  app.fallthrough();

  unsigned precision_bits = 256;
  std::string out_path;
  app.add_option("--precision-bits", precision_bits,
                 "working binary precision for atoms and weights")
      ->default_val(256);
  app.add_option("--out", out_path, "output path (default: stdout)");

  // distribution
  auto* dist = app.add_subcommand("distribution", "vacuum law of S_n");
  dist->fallthrough();
  int dist_n = 1;
  std::string dist_format = "json";
  dist->add_option("--n", dist_n, "number of position operators")->required();
  dist->add_option("--format", dist_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->fallthrough();
  std::string suite = "all";
  verify->add_option("--suite", suite, "all|fock|poly|spectral|binomial")
      ->check(CLI::IsMember({"all", "fock", "poly", "spectral", "binomial"}));

  // plot
  auto* plot = app.add_subcommand("plot", "SVG stem plot of the vacuum law");
  plot->fallthrough();
  int plot_n = 1, plot_w = 640, plot_h = 480;
  plot->add_option("--n", plot_n, "number of position operators")->required();
  plot->add_option("--width", plot_w, "width in pixels");
  plot->add_option("--height", plot_h, "height in pixels");

  // clt
  auto* clt = app.add_subcommand("clt", "rescaled-endpoint and arcsine table");
  clt->fallthrough();
  int clt_max_n = 20;
  clt->add_option("--max-n", clt_max_n, "largest trial count");

  // norm
  auto* norm = app.add_subcommand("norm", "norm of a gapped sum S_I");
  norm->fallthrough();
  std::string norm_indices;
  norm->add_option("--indices", norm_indices, "comma-separated index set")
      ->required();

  // polys
  auto* polys = app.add_subcommand("polys", "MGF polynomial pair (Q_m, P_m)");
  polys->fallthrough();
  int polys_m = 1;
  bool polys_exact = false;
  polys->add_option("--m", polys_m, "recurrence level")->required();
  polys->add_flag("--exact", polys_exact,
                  "coefficients as decimal strings (exact)");

  // counterexample
  auto* counter = app.add_subcommand(
      "counterexample", "commutant orbit of the S_{1,3} matrix");
  counter->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_working_precision(precision_bits);

    if (*dist) {
      if (dist_n < 1 || dist_n > binomial_cap())
        throw CapError("distribution requires 1 <= n <= " +
                       std::to_string(binomial_cap()));
      BinomialLawRecord rec = binomial_measure(dist_n, binomial_cap());
      write_output(out_path, dist_format == "csv"
                                 ? measure_to_csv(rec.measure)
                                 : measure_to_json(rec.measure));
      return kExitOk;
    }

    if (*verify) {
      SuiteReport report = run_verification(suite);
      write_output(out_path, report_to_json(report));
      std::cerr << "suite " << report.suite << ": "
                << report.count(CheckStatus::Pass) << " passed, "
                << report.count(CheckStatus::Fail) << " failed, "
                << report.count(CheckStatus::Flagged) << " flagged\n";
      return report.ok() ? kExitOk : kExitInvariantFailure;
    }

    if (*plot) {
      if (plot_n < 1 || plot_n > 12)
        throw CapError("plot requires 1 <= n <= 12");
      BinomialLawRecord rec = binomial_measure(plot_n, binomial_cap());
      std::string svg =
          render_stem_svg(rec.measure, plot_w, plot_h,
                          "Vacuum distribution, n = " + std::to_string(plot_n));
      write_output(out_path.empty() ? ("distribution_" + std::to_string(plot_n) + ".svg")
                                    : out_path,
                   svg);
      return kExitOk;
    }

    if (*clt) {
      auto rows = clt_table(clt_max_n, binomial_cap());
      write_output(out_path, clt_csv(rows));
      return kExitOk;
    }

    if (*norm) {
      std::vector<int> idx;
      try {
        std::stringstream ss(norm_indices);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) idx.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        std::cerr << "error: --indices expects a comma-separated integer list\n";
        return kExitUsage;
      }
      std::optional<IndexSet> parsed;
      try {
        parsed.emplace(idx);
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      const IndexSet& I = *parsed;
      TruncationSpec trunc(std::max(I.max() + 2, 6),
                           std::min(I.size() + 2, 6));
      GappedNormResult r = norm_of_gapped_sum(I, trunc);
      nlohmann::json j;
      j["indices"] = idx;
      j["norm"] = std::stod(format_significant(r.norm, 11));
      j["equals_contiguous"] = r.relabel_exact && r.matches_max_atom;
      write_output(out_path, j.dump(2));
      return kExitOk;
    }

    if (*polys) {
      RationalFn rf = mgf_pair(polys_m);
      std::ostringstream os;
      os << "{\"m\":" << polys_m << ",\"Q\":" << poly_to_json(rf.numerator, polys_exact)
         << ",\"P\":" << poly_to_json(rf.denominator, polys_exact) << "}";
      write_output(out_path, os.str());
      return kExitOk;
    }

    if (*counter) {
      CommutantOrbit orbit = commutant_orbit(counterexample_matrix());
      bool e2_zero = orbit.coordinate_vanishes_on_orbit(2);
      std::ostringstream os;
      os << "orbit_dimension: " << orbit.orbit_dimension() << "\n";
      os << "e2_coordinate: " << (e2_zero ? "0" : "nonzero") << "\n";
      write_output(out_path, os.str());
      return e2_zero ? kExitOk : kExitInvariantFailure;
    }
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariantFailure;
  }
  return kExitUsage;
}
