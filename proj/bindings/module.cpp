#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "monofock/binomial.hpp"
#include "monofock/errors.hpp"
#include "monofock/measure.hpp"
#include "monofock/operators.hpp"
#include "monofock/polynomial.hpp"
#include "monofock/spectral.hpp"
#include "monofock/verify.hpp"

namespace py = pybind11;
using namespace monofock;

namespace {

py::dict measure_to_dict(const AtomicMeasure& mu) {
  py::list atoms, weights;
  for (const auto& a : mu.atoms) atoms.append(static_cast<double>(a));
  for (const auto& w : mu.weights) weights.append(static_cast<double>(w));
  py::dict d;
  d["atoms"] = atoms;
  d["weights"] = weights;
  d["precision_bits"] = mu.precision_bits;
  d["label"] = mu.label;
  return d;
}

IntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error("matrix rows must be square");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_monofock, m) {
  m.doc() = "monotone Fock position-operator toolkit";

  m.def("set_working_precision", &set_working_precision, py::arg("bits"),
        "set the working binary precision for atom/weight arithmetic");
  m.def("working_precision", &working_precision);

  m.def(
      "binomial_measure",
      [](int n) { return measure_to_dict(binomial_measure(n).measure); },
      py::arg("n"), "vacuum law of S_n as {atoms, weights, ...}");

  m.def(
      "max_atom",
      [](int n) { return static_cast<double>(max_atom_chain(n)); },
      py::arg("n"), "largest atom of the vacuum law of S_n");

  m.def(
      "endpoint_bounds",
      [](int n) {
        auto [lo, hi] = endpoint_bounds(n);
        return py::make_tuple(static_cast<double>(lo), static_cast<double>(hi));
      },
      py::arg("n"));

  m.def(
      "children_atoms",
      [](double a) {
        auto [lo, hi] = children_atoms(BigFloat(a));
        return py::make_tuple(static_cast<double>(lo), static_cast<double>(hi));
      },
      py::arg("a"));

  m.def(
      "child_weight",
      [](double w, double r) {
        return static_cast<double>(child_weight(BigFloat(w), BigFloat(r)));
      },
      py::arg("w_parent"), py::arg("r_child"));

  m.def(
      "monotone_convolve",
      [](const py::dict& mu, const py::dict& nu) {
        auto parse = [](const py::dict& d) {
          std::vector<BigFloat> atoms, weights;
          for (const auto& a : d["atoms"]) atoms.push_back(BigFloat(a.cast<double>()));
          for (const auto& w : d["weights"])
            weights.push_back(BigFloat(w.cast<double>()));
          unsigned bits = d.contains("precision_bits")
                              ? d["precision_bits"].cast<unsigned>()
                              : 53;
          return make_atomic_measure(std::move(atoms), std::move(weights), bits,
                                     d.contains("label")
                                         ? d["label"].cast<std::string>()
                                         : "");
        };
        return measure_to_dict(monotone_convolve(parse(mu), parse(nu)));
      },
      py::arg("mu"), py::arg("nu"));

  m.def(
      "mgf_pair",
      [](int mm) {
        RationalFn rf = mgf_pair(mm);
        auto dump = [](const IntPoly& p) {
          py::list out;
          for (int i = 0; i <= p.degree(); ++i) out.append(p[i].str());
          return out;
        };
        return py::make_tuple(dump(rf.numerator), dump(rf.denominator));
      },
      py::arg("m"), "(Q_m, P_m) coefficients as decimal strings");

  m.def(
      "mgf_series",
      [](int mm, int order) {
        TruncatedSeries s = series_of(mgf_pair(mm), order);
        py::list out;
        for (const auto& c : s.coeffs) out.append(c.str());
        return out;
      },
      py::arg("m"), py::arg("order"));

  m.def(
      "moment",
      [](int n, int k) { return moment_oracle(n, k).str(); },
      py::arg("n"), py::arg("k"),
      "exact vacuum moment (S_n^k)_00 as a decimal string");

  m.def(
      "invariant_matrix",
      [](const std::vector<int>& indices) {
        IntMatrix b = invariant_subspace_matrix(IndexSet(indices));
        std::vector<std::vector<long long>> rows(
            b.rows(), std::vector<long long>(b.cols()));
        for (int i = 0; i < b.rows(); ++i)
          for (int j = 0; j < b.cols(); ++j)
            rows[i][j] = b.at(i, j).convert_to<long long>();
        return rows;
      },
      py::arg("indices"));

  m.def(
      "eigen_decompose",
      [](const std::vector<std::vector<long long>>& rows) {
        SpectralDecomposition sd = eigen_decompose(matrix_from_rows(rows));
        py::dict d;
        d["eigenvalues"] = sd.eigenvalues;
        d["vacuum_weights"] = sd.vacuum_weights;
        d["max_residual"] = sd.max_residual;
        return d;
      },
      py::arg("matrix"));

  m.def(
      "norm_of_sum",
      [](const std::vector<int>& indices) {
        IndexSet I(indices);
        TruncationSpec trunc(I.max() + 2, std::min(I.size() + 2, 6));
        GappedNormResult r = norm_of_gapped_sum(I, trunc);
        py::dict d;
        d["norm"] = r.norm;
        d["equals_contiguous"] = r.relabel_exact && r.matches_max_atom;
        return d;
      },
      py::arg("indices"));

  m.def(
      "clt_rows",
      [](int max_n) {
        py::list out;
        for (const auto& row : clt_table(max_n)) {
          py::dict d;
          d["n"] = row.n;
          d["max_atom"] = row.max_atom;
          d["ratio"] = row.ratio;
          d["ks_distance"] = row.ks_distance;
          out.append(d);
        }
        return out;
      },
      py::arg("max_n"));

  m.def("verify", [](const std::string& suite) {
    SuiteReport r = run_verification(suite);
    py::dict d;
    d["suite"] = r.suite;
    d["pass"] = r.count(CheckStatus::Pass);
    d["fail"] = r.count(CheckStatus::Fail);
    d["flagged"] = r.count(CheckStatus::Flagged);
    d["ok"] = r.ok();
    return d;
  });

  static py::exception<Error> exc(m, "MonofockError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc(e.what());
    }
  });
}
