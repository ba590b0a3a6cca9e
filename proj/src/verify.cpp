#include "monofock/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "monofock/binomial.hpp"
#include "monofock/errors.hpp"
#include "monofock/measure.hpp"
#include "monofock/operators.hpp"
#include "monofock/polynomial.hpp"
#include "monofock/spectral.hpp"

namespace monofock {

int SuiteReport::count(CheckStatus s) const {
  int c = 0;
  for (const auto& ch : checks)
    if (ch.status == s) ++c;
  return c;
}

namespace {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

  /// Runs fn; Pass iff it returns true without throwing.
  void check(const std::string& name, const std::string& inputs,
             const std::function<bool(std::string&)>& fn) {
    CheckResult r;
    r.name = name;
    r.inputs = inputs;
    try {
      std::string details;
      r.status = fn(details) ? CheckStatus::Pass : CheckStatus::Fail;
      r.details = details;
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.details = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  /// Records a known-discrepancy diagnostic; never fails the suite.
  void flagged(const std::string& name, const std::string& inputs,
               const std::function<std::string()>& fn) {
    CheckResult r;
    r.name = name;
    r.inputs = inputs;
    r.status = CheckStatus::Flagged;
    try {
      r.details = fn();
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.details = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string d2s(double x) { return format_significant(x, 12); }

// ---------------------------------------------------------------------------
// fock suite: operator relations at N = L = 8
// ---------------------------------------------------------------------------

SuiteReport fock_suite() {
  SuiteBuilder b("fock");
  const TruncationSpec trunc(8, 8);
  auto basis = std::make_shared<Basis>(enumerate_basis(trunc));
  const int N = trunc.max_index;

  std::vector<SparseOperator> a, adag, s;
  for (int i = 1; i <= N; ++i) {
    a.push_back(build_elementary(ElementaryKind::Annihilator, i, trunc, basis));
    adag.push_back(build_elementary(ElementaryKind::Creator, i, trunc, basis));
    s.push_back(build_position(i, trunc, basis));
  }

  b.check("comrul_products", "{\"N\":8,\"L\":8}", [&](std::string& det) {
    // a†_i a†_j = a_j a_i = 0 for i >= j (safe columns); a_i a†_j = 0 for
    // i != j on every column in matrix semantics.
    long safe_cols = 0;
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= i; ++j) {
        for (int col = 0; col < basis->dim(); ++col) {
          auto w1 = safe_apply_word({&adag[j - 1], &adag[i - 1]}, col);
          if (w1) {
            ++safe_cols;
            if (!w1->empty()) return false;
          }
          auto w2 = safe_apply_word({&a[i - 1], &a[j - 1]}, col);
          if (w2 && !w2->empty()) return false;
        }
      }
    }
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (i == j) continue;
        for (int col = 0; col < basis->dim(); ++col)
          if (!apply_word_matrix({&adag[j - 1], &a[i - 1]}, col).empty())
            return false;
      }
    det = "safe creator-pair columns checked: " + std::to_string(safe_cols);
    return safe_cols > 0;
  });

  b.check("comrul2_partition_of_identity", "{\"N\":8,\"L\":8}",
          [&](std::string& det) {
            long safe_cols = 0;
            for (int i = 1; i <= N; ++i) {
              for (int col = 0; col < basis->dim(); ++col) {
                std::map<int, std::int64_t> acc;
                bool safe = true;
                auto add = [&](const std::optional<std::map<int, std::int64_t>>& w) {
                  if (!w) {
                    safe = false;
                    return;
                  }
                  for (const auto& [r, v] : *w) {
                    acc[r] += v;
                    if (acc[r] == 0) acc.erase(r);
                  }
                };
                add(safe_apply_word({&adag[i - 1], &a[i - 1]}, col));
                for (int k = 1; k <= i && safe; ++k)
                  add(safe_apply_word({&a[k - 1], &adag[k - 1]}, col));
                if (!safe) continue;
                ++safe_cols;
                if (acc.size() != 1 || acc.begin()->first != col ||
                    acc.begin()->second != 1)
                  return false;
              }
            }
            det = "safe columns: " + std::to_string(safe_cols);
            return safe_cols > 0;
          });

  b.check("position_power_identities", "{\"N\":8,\"L\":8}",
          [&](std::string& det) {
            // s_i^3 = s_i and s_i^4 = s_i^2 on safe columns.
            long safe_cols = 0;
            for (int i = 1; i <= N; ++i) {
              const SparseOperator* si = &s[i - 1];
              for (int col = 0; col < basis->dim(); ++col) {
                auto p3 = safe_apply_word({si, si, si}, col);
                auto p1 = safe_apply_word({si}, col);
                if (p3 && p1) {
                  ++safe_cols;
                  if (!(*p3 == *p1)) return false;
                }
                auto p4 = safe_apply_word({si, si, si, si}, col);
                auto p2 = safe_apply_word({si, si}, col);
                if (p4 && p2 && !(*p4 == *p2)) return false;
              }
            }
            det = "safe cubic columns: " + std::to_string(safe_cols);
            return safe_cols > 0;
          });

  b.check("s_squared_shifts_next", "{\"N\":8,\"L\":8}", [&](std::string& det) {
    // s_i^2 s_{i+1} = s_{i+1} on safe columns.
    long safe_cols = 0;
    for (int i = 1; i < N; ++i) {
      for (int col = 0; col < basis->dim(); ++col) {
        auto lhs = safe_apply_word({&s[i], &s[i - 1], &s[i - 1]}, col);
        auto rhs = safe_apply_word({&s[i]}, col);
        if (lhs && rhs) {
          ++safe_cols;
          if (!(*lhs == *rhs)) return false;
        }
      }
    }
    det = "safe columns: " + std::to_string(safe_cols);
    return safe_cols > 0;
  });

  b.check("position_partition_of_identity", "{\"N\":8,\"L\":8}",
          [&](std::string& det) {
            // s_{i+1}^2 + sum_{j<=i} s_j s_{j+1}^2 s_j = I on safe columns.
            long safe_cols = 0;
            for (int i = 1; i < N; ++i) {
              for (int col = 0; col < basis->dim(); ++col) {
                std::map<int, std::int64_t> acc;
                bool safe = true;
                auto add = [&](const std::optional<std::map<int, std::int64_t>>& w) {
                  if (!w) {
                    safe = false;
                    return;
                  }
                  for (const auto& [r, v] : *w) {
                    acc[r] += v;
                    if (acc[r] == 0) acc.erase(r);
                  }
                };
                add(safe_apply_word({&s[i], &s[i]}, col));
                for (int j = 1; j <= i && safe; ++j)
                  add(safe_apply_word({&s[j - 1], &s[j], &s[j], &s[j - 1]}, col));
                if (!safe) continue;
                ++safe_cols;
                if (acc.size() != 1 || acc.begin()->first != col ||
                    acc.begin()->second != 1)
                  return false;
              }
            }
            det = "safe columns: " + std::to_string(safe_cols);
            return safe_cols > 0;
          });

  b.check("matrices_exactly_symmetric", "{\"N\":8,\"L\":8}",
          [&](std::string&) {
            for (int i = 1; i <= N; ++i)
              if (!s[i - 1].is_symmetric()) return false;
            return build_sum(IndexSet({1, 2, 3}), trunc, basis).is_symmetric() &&
                   build_sum(IndexSet({2, 5, 7}), trunc, basis).is_symmetric();
          });

  b.check("elementary_columns_norm_one", "{\"N\":8,\"L\":8}",
          [&](std::string&) {
            for (int i = 1; i <= N; ++i) {
              if (!a[i - 1].columns_are_partial_permutation()) return false;
              if (!adag[i - 1].columns_are_partial_permutation()) return false;
              if (!build_elementary(ElementaryKind::RightAnnihilator, i, trunc, basis)
                       .columns_are_partial_permutation())
                return false;
              if (!build_elementary(ElementaryKind::RightCreator, i, trunc, basis)
                       .columns_are_partial_permutation())
                return false;
            }
            return true;
          });

  b.check("invariant_block_depends_only_on_size", "{\"sets\":[[1,3],[2,5],[1,2],[2,5,9],[1,2,3],[3,6,8,12]]}",
          [&](std::string&) {
            if (!(invariant_subspace_matrix(IndexSet({1, 3})) ==
                  invariant_subspace_matrix(IndexSet({1, 2}))))
              return false;
            if (!(invariant_subspace_matrix(IndexSet({2, 5})) ==
                  invariant_subspace_matrix(IndexSet({1, 2}))))
              return false;
            if (!(invariant_subspace_matrix(IndexSet({2, 5, 9})) ==
                  invariant_subspace_matrix(IndexSet({1, 2, 3}))))
              return false;
            return invariant_subspace_matrix(IndexSet({3, 6, 8, 12})) ==
                   invariant_subspace_matrix(IndexSet({1, 2, 3, 4}));
          });

  b.check("right_operators_commute_with_sums", "{\"n\":\"1..4\",\"j\":\"0..3\"}",
          [&](std::string& det) {
            // [S_n, r_{n+j}] = 0 exactly on safe vectors.
            std::ostringstream os;
            for (int n = 1; n <= 4; ++n) {
              std::vector<int> idx(n);
              for (int i = 0; i < n; ++i) idx[i] = i + 1;
              SparseOperator sn = build_sum(IndexSet(idx), trunc, basis);
              for (int j = 0; j <= 3; ++j) {
                SparseOperator r = build_right_position(n + j, trunc, basis);
                auto c = commutator_on_safe_vectors(sn, r);
                if (!c) return false;
                if (*c != 0) return false;
              }
            }
            // Order matters: [s_2, r_1] has a nonzero safe column.
            SparseOperator s2 = build_position(2, trunc, basis);
            SparseOperator r1 = build_right_position(1, trunc, basis);
            auto c = commutator_on_safe_vectors(s2, r1);
            if (!c || *c == 0) return false;
            // Self commutator vanishes.
            auto cs = commutator_on_safe_vectors(s2, s2);
            if (!cs || *cs != 0) return false;
            det = "[s_2, r_1] max |entry| = " + std::to_string(*c);
            return true;
          });

  return b.take();
}

// ---------------------------------------------------------------------------
// poly suite
// ---------------------------------------------------------------------------

SuiteReport poly_suite() {
  SuiteBuilder b("poly");

  b.check("mgf_seed_and_known_pairs", "{\"m\":\"1..3\"}", [&](std::string&) {
    RationalFn f1 = mgf_pair(1);
    if (!(f1.numerator == IntPoly::constant(1))) return false;
    if (!(f1.denominator == IntPoly({std::vector<BigInt>{1, 0, -1}})))
      return false;
    RationalFn f2 = mgf_pair(2);
    if (!(f2.denominator == IntPoly({std::vector<BigInt>{1, 0, -3, 0, 1}})))
      return false;
    if (!(f2.numerator == IntPoly({std::vector<BigInt>{1, 0, -1}})))
      return false;
    RationalFn f3 = mgf_pair(3);
    return f3.denominator ==
               IntPoly({std::vector<BigInt>{1, 0, -7, 0, 13, 0, -7, 0, 1}}) &&
           f3.numerator ==
               IntPoly({std::vector<BigInt>{1, 0, -4, 0, 4, 0, -1}});
  });

  b.check("structure_monic_even_unit_constant", "{\"n\":\"1..6\"}",
          [&](std::string&) {
            for (int n = 1; n <= 6; ++n)
              if (!structure_check(n)) return false;
            for (int n = 1; n <= 6; ++n)
              if (mgf_pair(n + 1).numerator.constant_term() != 1) return false;
            return true;
          });

  b.check("series_match_moments", "{\"m\":\"1..3\"}", [&](std::string&) {
    auto s1 = series_of(mgf_pair(1), 4);
    std::vector<BigRational> want1{1, 0, 1, 0, 1};
    if (s1.coeffs != want1) return false;
    auto s2 = series_of(mgf_pair(2), 4);
    std::vector<BigRational> want2{1, 0, 2, 0, 5};
    if (s2.coeffs != want2) return false;
    auto s3 = series_of(mgf_pair(3), 2);
    std::vector<BigRational> want3{1, 0, 3};
    return s3.coeffs == want3;
  });

  b.check("t_recurrence_routes_agree", "{\"m\":\"1..4\",\"K\":16}",
          [&](std::string&) {
            for (int m = 1; m <= 4; ++m)
              if (!t_recurrence_check(m, 16)) return false;
            return true;
          });

  b.check("sturm_counts_all_roots_real", "{\"m\":\"1..5\"}",
          [&](std::string&) {
            for (int m = 1; m <= 5; ++m) {
              RationalFn f = mgf_pair(m);
              if (sturm_root_count(f.denominator) != f.denominator.degree())
                return false;
            }
            return true;
          });

  b.check("interlacing", "{\"n\":\"1..4\"}", [&](std::string&) {
    for (int n = 1; n <= 4; ++n)
      if (!interlacing_check(n)) return false;
    return true;
  });

  b.check("roots_disjoint_gcd_constant", "{\"n\":\"1..6\"}",
          [&](std::string&) {
            for (int n = 1; n <= 6; ++n) {
              RationalFn f = mgf_pair(n);
              if (poly_gcd(f.denominator, f.numerator).degree() != 0)
                return false;
            }
            return true;
          });

  b.check("palindromic_inverse_pair_structure", "{\"m\":\"2..6\"}",
          [&](std::string&) {
            for (int m = 2; m <= 6; ++m) {
              const IntPoly& p = mgf_pair(m).denominator;
              if (!p.is_palindromic() || !p.has_only_even_terms()) return false;
            }
            return true;
          });

  b.check("bolzano_sign_change_shadow", "{\"n\":\"2..4\"}", [&](std::string&) {
    // P_{n+1} < 0 at roots of P_n and > 0 at roots of Q_n.
    for (int n = 2; n <= 4; ++n) {
      RationalFn cur = mgf_pair(n);
      RationalFn next = mgf_pair(n + 1);
      for (const auto& ri : sturm_isolate(cur.denominator)) {
        RootInterval t = refine_interval(ri, 64);
        if (next.denominator.sign_at(t.midpoint()) >= 0) return false;
      }
      for (const auto& ri : sturm_isolate(cur.numerator)) {
        RootInterval t = refine_interval(ri, 64);
        if (next.denominator.sign_at(t.midpoint()) <= 0) return false;
      }
    }
    return true;
  });

  b.check("series_coefficients_positive_increasing_in_m", "{\"m\":\"1..6\",\"K\":16}",
          [&](std::string&) {
            std::vector<TruncatedSeries> series;
            for (int m = 1; m <= 6; ++m)
              series.push_back(series_of(mgf_pair(m), 16));
            for (int m = 0; m < 6; ++m)
              for (int k = 0; k <= 16; ++k) {
                const BigRational& c = series[m].coeffs[k];
                if (k % 2 == 1 && c != 0) return false;
                if (k % 2 == 0 && c <= 0) return false;
                if (denominator(c) != 1) return false;
                if (m > 0 && k >= 2 && k % 2 == 0 &&
                    c <= series[m - 1].coeffs[k])
                  return false;
              }
            return true;
          });

  b.check("polyroute_matches_recurrence", "{\"m\":\"1..4\"}",
          [&](std::string& det) {
            double max_dev = 0;
            for (int m = 1; m <= 4; ++m) {
              AtomicMeasure poly_route = measure_from_polys(m);
              BinomialLawRecord rec = binomial_measure(m);
              if (poly_route.size() != rec.measure.size()) return false;
              for (std::size_t k = 0; k < poly_route.size(); ++k) {
                max_dev = std::max(
                    max_dev,
                    std::abs(static_cast<double>(poly_route.atoms[k] -
                                                 rec.measure.atoms[k])));
                max_dev = std::max(
                    max_dev,
                    std::abs(static_cast<double>(poly_route.weights[k] -
                                                 rec.measure.weights[k])));
              }
            }
            det = "max deviation " + d2s(max_dev);
            return max_dev < 1e-12;
          });

  return b.take();
}

// ---------------------------------------------------------------------------
// binomial suite
// ---------------------------------------------------------------------------

std::string wei1_comparison_details() {
  std::ostringstream os;
  os << "Eq-as-printed weight formula vs verified residue rule:";
  for (int n = 2; n <= 4; ++n) {
    BinomialLawRecord cur = binomial_measure(n);
    BinomialLawRecord prev = binomial_measure(n - 1);
    BigFloat sum = 0, abs_sum = 0, max_dev = 0;
    for (std::size_t k = 0; k < cur.measure.size(); ++k) {
      BigFloat w =
          paper_weight_formula(k, cur.measure.atoms, prev.measure.atoms);
      sum += w;
      abs_sum += abs(w);
      max_dev = std::max(max_dev, abs(w - cur.measure.weights[k]));
    }
    os << " [n=" << n << ": printed-sum=" << format_significant(sum, 6)
       << ", |printed|-sum=" << format_significant(abs_sum, 6)
       << ", max |printed - residue| = " << format_significant(max_dev, 6)
       << "]";
  }
  os << "; the residue rule matches the eigen oracle, the printed formula "
        "does not sum to 1 (suspected misprint in the paper's weight "
        "display).";
  return os.str();
}

SuiteReport binomial_suite() {
  SuiteBuilder b("binomial");

  b.check("bernoulli_base_case", "{\"n\":1}", [&](std::string&) {
    BinomialLawRecord rec = binomial_measure(1);
    return rec.measure.atoms == std::vector<BigFloat>{BigFloat(-1), BigFloat(1)} &&
           rec.measure.weights ==
               std::vector<BigFloat>{BigFloat(1) / 2, BigFloat(1) / 2};
  });

  b.check("golden_ratio_case", "{\"n\":2}", [&](std::string& det) {
    BinomialLawRecord rec = binomial_measure(2);
    const double phi = 1.6180339887498948482;
    const double psi = 0.6180339887498948482;
    const double w_big = 0.36180339887498948482;
    const double w_small = 0.13819660112501051518;
    double dev = 0;
    auto upd = [&](const BigFloat& got, double want) {
      dev = std::max(dev, std::abs(static_cast<double>(got) - want));
    };
    upd(rec.measure.atoms[0], -phi);
    upd(rec.measure.atoms[1], -psi);
    upd(rec.measure.atoms[2], psi);
    upd(rec.measure.atoms[3], phi);
    // layout fixed by the eigen oracle: the outer atoms carry the larger
    // weight
    upd(rec.measure.weights[0], w_big);
    upd(rec.measure.weights[1], w_small);
    upd(rec.measure.weights[2], w_small);
    upd(rec.measure.weights[3], w_big);
    det = "max deviation " + d2s(dev);
    return dev < 1e-15;
  });

  b.check("symmetry_and_inverse_pairs", "{\"n\":\"1..10\"}",
          [&](std::string&) {
            const BigFloat tol = pow2(-100);
            for (int n = 1; n <= 10; ++n) {
              BinomialLawRecord rec = binomial_measure(n);
              if (!rec.measure.is_symmetric(tol)) return false;
              // children of a and -a multiply to 1 on the increasing branch
              for (std::size_t k = 0; k < rec.measure.size(); ++k) {
                const BigFloat& a = rec.measure.atoms[k];
                BigFloat r = children_atoms(a).second;
                BigFloat rp = children_atoms(-a).second;
                if (abs(r * rp - 1) > tol) return false;
              }
            }
            return true;
          });

  b.check("per_parent_mass_conservation", "{\"n\":\"1..8\"}",
          [&](std::string&) {
            const BigFloat tol = pow2(-200);
            for (int n = 1; n <= 8; ++n) {
              BinomialLawRecord rec = binomial_measure(n);
              for (std::size_t k = 0; k < rec.measure.size(); ++k) {
                auto [lo, hi] = children_atoms(rec.measure.atoms[k]);
                BigFloat w = rec.measure.weights[k];
                if (abs(child_weight(w, lo) + child_weight(w, hi) - w) > tol)
                  return false;
              }
            }
            return true;
          });

  b.check("endpoint_sandwich", "{\"n\":\"1..20\"}", [&](std::string&) {
    for (int n = 1; n <= 20; ++n) {
      auto [lo, hi] = endpoint_bounds(n);
      BigFloat m = max_atom_chain(n);
      if (!(lo <= m && m < hi)) return false;
    }
    return true;
  });

  b.check("rescaled_max_atom_increasing", "{\"n\":\"1..20\"}",
          [&](std::string&) {
            const BigFloat sqrt2 = sqrt(BigFloat(2));
            BigFloat prev = 0;
            for (int n = 1; n <= 20; ++n) {
              BigFloat ratio = max_atom_chain(n) / sqrt(BigFloat(n));
              if (ratio <= prev || ratio >= sqrt2) return false;
              if (!max_atom_ratio_inequality(n)) return false;
              prev = ratio;
            }
            return true;
          });

  b.check("moments_match_matrix_oracle", "{\"n\":2,\"k\":[2,4]}",
          [&](std::string&) {
            BinomialLawRecord rec = binomial_measure(2);
            if (abs(moment(rec.measure, 2) - 2) > pow2(-200)) return false;
            if (abs(moment(rec.measure, 4) - 5) > pow2(-200)) return false;
            return moment_oracle(2, 2) == 2 && moment_oracle(2, 4) == 5;
          });

  b.check("eigen_oracle_equivalence", "{\"n\":\"1..8\"}",
          [&](std::string& det) {
            double max_dev = 0;
            for (int n = 1; n <= 8; ++n) {
              SpectrumSupportReport rep = spectrum_support_check(n);
              if (!rep.ok) return false;
              max_dev = std::max(
                  {max_dev, rep.max_atom_deviation, rep.max_weight_deviation});
            }
            det = "max deviation " + d2s(max_dev);
            return max_dev < 1e-9;
          });

  b.flagged("wei1_printed_formula_comparison", "{\"n\":\"2..4\"}",
            wei1_comparison_details);

  return b.take();
}

// ---------------------------------------------------------------------------
// spectral suite
// ---------------------------------------------------------------------------

SuiteReport spectral_suite() {
  SuiteBuilder b("spectral");

  b.check("bernoulli_block_decomposition", "{\"matrix\":\"[[0,1],[1,0]]\"}",
          [&](std::string&) {
            IntMatrix m(2, 2);
            m.at(0, 1) = 1;
            m.at(1, 0) = 1;
            SpectralDecomposition sd = eigen_decompose(m);
            return std::abs(sd.eigenvalues[0] + 1) < 1e-14 &&
                   std::abs(sd.eigenvalues[1] - 1) < 1e-14 &&
                   std::abs(sd.vacuum_weights[0] - 0.5) < 1e-14 &&
                   std::abs(sd.vacuum_weights[1] - 0.5) < 1e-14;
          });

  b.check("spectrum_equals_support", "{\"n\":\"1..10\"}", [&](std::string& det) {
    double max_dev = 0, min_w = 1;
    for (int n = 1; n <= 10; ++n) {
      SpectrumSupportReport rep = spectrum_support_check(n);
      if (!rep.ok) return false;
      max_dev = std::max(max_dev, rep.max_atom_deviation);
      min_w = std::min(min_w, rep.min_vacuum_weight);
    }
    det = "max atom deviation " + d2s(max_dev) + ", min vacuum weight " +
          d2s(min_w);
    return true;
  });

  b.check("identity_polynomials_known_cases", "{\"n\":\"1..3\"}",
          [&](std::string&) {
            auto s1 = identity_polynomial(1);
            if (!s1 || s1->alphas != std::vector<BigRational>{1}) return false;
            auto s2 = identity_polynomial(2);
            if (!s2 || s2->alphas != std::vector<BigRational>{3, -1})
              return false;
            auto s3 = identity_polynomial(3);
            if (!s3 ||
                s3->alphas != std::vector<BigRational>{7, -13, 7, -1})
              return false;
            return s1->fock_verified && s2->fock_verified && s3->fock_verified;
          });

  b.flagged("identity_polynomial_conjectured_bound", "{\"n\":\"4..5\"}",
            [&]() {
              std::ostringstream os;
              os << "minimal exact identities found:";
              for (int n = 4; n <= 5; ++n) {
                auto sol = identity_polynomial(n);
                if (!sol || !sol->fock_verified)
                  throw StructureError("no identity found at all");
                os << " [n=" << n << ": " << sol->terms
                   << " even powers (top power " << 2 * sol->terms
                   << "), conjectured bound " << sol->conjectured_bound
                   << " terms"
                   << (sol->within_conjectured_bound ? "" : " EXCEEDED") << "]";
              }
              os << "; the invariant block has 2^n simple eigenvalues, so "
                    "its minimal polynomial forces 2^(n-1) even powers - "
                    "evidence against the printed bound (n-1)n/2+1.";
              return os.str();
            });

  b.check("moment_oracle_equals_series", "{\"n\":\"1..6\",\"k\":\"0..16\"}",
          [&](std::string&) {
            for (int n = 1; n <= 6; ++n) {
              TruncatedSeries s = series_of(mgf_pair(n), 16);
              for (int k = 0; k <= 16; ++k) {
                BigRational expect = s.coeffs[k];
                if (BigRational(moment_oracle(n, k)) != expect) return false;
              }
            }
            return true;
          });

  b.check("gapped_sum_norms", "{\"I\":\"gapped subsets of {1..8}, |I| <= 4\"}",
          [&](std::string& det) {
            const TruncationSpec trunc(8, 5);
            int checked = 0;
            for (int mask = 1; mask < 256; ++mask) {
              std::vector<int> idx;
              for (int i = 0; i < 8; ++i)
                if (mask & (1 << i)) idx.push_back(i + 1);
              if (idx.size() < 2 || idx.size() > 4) continue;
              IndexSet I(idx);
              if (I.contiguous_from_one()) continue;
              GappedNormResult r = norm_of_gapped_sum(I, trunc);
              if (!r.relabel_exact || !r.matches_max_atom || !r.margin_ok)
                return false;
              ++checked;
            }
            det = std::to_string(checked) + " gapped index sets";
            return checked > 0;
          });

  b.check("counterexample_matrix_matches_paper", "{\"I\":[1,3]}",
          [&](std::string&) {
            IntMatrix a = counterexample_matrix();
            const int want[8][8] = {
                {0, 1, 0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 1, 0, 0},
                {0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 0}};
            if (a.rows() != 8) return false;
            for (int i = 0; i < 8; ++i)
              for (int j = 0; j < 8; ++j)
                if (a.at(i, j) != want[i][j]) return false;
            return true;
          });

  b.check("counterexample_vacuum_not_cyclic", "{\"I\":[1,3]}",
          [&](std::string& det) {
            CommutantOrbit orbit = commutant_orbit(counterexample_matrix());
            // forced zero pattern (1-based rows/cols of the paper)
            for (int j : {3, 5, 7, 8})
              if (!orbit.entry_vanishes_on_commutant(0, j - 1)) return false;
            for (int j : {1, 2, 4, 6})
              if (!orbit.entry_realized_on_commutant(0, j - 1)) return false;
            for (int j : {1, 2, 4, 6})
              if (!orbit.entry_vanishes_on_commutant(2, j - 1)) return false;
            // e_2 (coordinate index 2) never enters the orbit
            if (!orbit.coordinate_vanishes_on_orbit(2)) return false;
            det = "orbit dimension " + std::to_string(orbit.orbit_dimension()) +
                  ", commutant dimension " +
                  std::to_string(orbit.commutant_basis.size());
            return orbit.orbit_dimension() < orbit.space_dim;
          });

  b.check("vacuum_cyclic_for_commutant", "{\"n\":\"1..5\"}",
          [&](std::string&) {
            for (int n = 1; n <= 5; ++n) {
              std::vector<int> idx(n);
              for (int i = 0; i < n; ++i) idx[i] = i + 1;
              CommutantOrbit orbit =
                  commutant_orbit(invariant_subspace_matrix(IndexSet(idx)));
              if (orbit.orbit_dimension() != (1 << n)) return false;
            }
            return true;
          });

  b.flagged("wei1_printed_formula_comparison", "{\"n\":\"2..4\"}",
            wei1_comparison_details);

  return b.take();
}

}  // namespace

SuiteReport run_verification(const std::string& suite) {
  if (suite == "fock") return fock_suite();
  if (suite == "poly") return poly_suite();
  if (suite == "binomial") return binomial_suite();
  if (suite == "spectral") return spectral_suite();
  if (suite == "all") {
    SuiteReport all;
    all.suite = "all";
    for (const char* s : {"fock", "poly", "binomial", "spectral"}) {
      SuiteReport r = run_verification(s);
      for (auto& c : r.checks) {
        c.name = std::string(s) + "/" + c.name;
        all.checks.push_back(std::move(c));
      }
    }
    return all;
  }
  throw Error("unknown suite: " + suite);
}

std::string report_to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["inputs"] = nlohmann::json::parse(c.inputs.empty() ? "{}" : c.inputs);
    e["status"] = c.status == CheckStatus::Pass
                      ? "pass"
                      : (c.status == CheckStatus::Fail ? "fail" : "flagged");
    e["details"] = c.details;
    j["checks"].push_back(std::move(e));
  }
  j["counts"] = {{"pass", report.count(CheckStatus::Pass)},
                 {"fail", report.count(CheckStatus::Fail)},
                 {"flagged", report.count(CheckStatus::Flagged)}};
  return j.dump(2);
}

}  // namespace monofock
