#include "monofock/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>

#include "monofock/binomial.hpp"
#include "monofock/errors.hpp"
#include "monofock/operators.hpp"

namespace monofock {

namespace {
using LongMatrix =
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
}

SpectralDecomposition eigen_decompose(const IntMatrix& m, double tol) {
  if (!m.is_symmetric())
    throw StructureError("eigen_decompose requires a symmetric matrix");
  const int d = m.rows();
  LongMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      a(i, j) = static_cast<long double>(m.at(i, j).convert_to<double>());

  Eigen::SelfAdjointEigenSolver<LongMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw PrecisionError("eigen_decompose failed to converge");

  SpectralDecomposition out;
  out.dim = d;
  out.eigenvalues.resize(d);
  out.vacuum_weights.resize(d);
  long double max_res = 0;
  for (int k = 0; k < d; ++k) {
    out.eigenvalues[k] = static_cast<double>(solver.eigenvalues()(k));
    const auto v = solver.eigenvectors().col(k);
    out.vacuum_weights[k] = static_cast<double>(v(0) * v(0));
    const auto res = (a * v - solver.eigenvalues()(k) * v).cwiseAbs().maxCoeff();
    max_res = std::max(max_res, res);
  }
  out.max_residual = static_cast<double>(max_res);
  if (out.max_residual > tol)
    throw PrecisionError("eigen_decompose residual above tolerance");
  return out;
}

SpectrumSupportReport spectrum_support_check(int n, double tol) {
  if (n > 10) throw CapError("spectrum_support_check cap: n <= 10");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i + 1;
  IntMatrix block = invariant_subspace_matrix(IndexSet(idx));
  SpectralDecomposition sd = eigen_decompose(block);
  BinomialLawRecord rec = binomial_measure(n);

  SpectrumSupportReport rep;
  rep.min_vacuum_weight = 1.0;
  for (std::size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    rep.max_atom_deviation = std::max(
        rep.max_atom_deviation,
        std::abs(sd.eigenvalues[k] - static_cast<double>(rec.measure.atoms[k])));
    rep.max_weight_deviation =
        std::max(rep.max_weight_deviation,
                 std::abs(sd.vacuum_weights[k] -
                          static_cast<double>(rec.measure.weights[k])));
    rep.min_vacuum_weight = std::min(rep.min_vacuum_weight, sd.vacuum_weights[k]);
  }
  rep.norm_deviation = std::abs(sd.eigenvalues.back() -
                                static_cast<double>(rec.max_atom));
  rep.ok = rep.max_atom_deviation < tol && rep.min_vacuum_weight > 0 &&
           rep.norm_deviation < tol;
  return rep;
}

namespace {

/// Even powers M^2, M^4, ..., M^{2*count}.
std::vector<IntMatrix> even_powers(const IntMatrix& m, int count) {
  std::vector<IntMatrix> powers;
  IntMatrix m2 = m.multiply(m);
  IntMatrix acc = m2;
  powers.push_back(acc);
  for (int k = 1; k < count; ++k) {
    acc = acc.multiply(m2);
    powers.push_back(acc);
  }
  return powers;
}

/// Solves sum alpha_k powers[k] = I with k_max terms, deduplicating
/// repeated equations first.
std::optional<std::vector<BigRational>> solve_identity(
    const std::vector<IntMatrix>& powers, int k_max, int d) {
  std::map<std::vector<BigInt>, char> seen;
  std::vector<std::vector<BigRational>> columns(k_max);
  std::vector<BigRational> rhs;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::vector<BigInt> key(k_max + 1);
      for (int k = 0; k < k_max; ++k) key[k] = powers[k].at(i, j);
      key[k_max] = (i == j) ? 1 : 0;
      if (!seen.emplace(std::move(key), 1).second) continue;
      for (int k = 0; k < k_max; ++k)
        columns[k].push_back(BigRational(powers[k].at(i, j)));
      rhs.push_back(BigRational(i == j ? 1 : 0));
    }
  }
  return solve_columns(columns, rhs);
}

/// Exact full-space verification on a handful of untruncated vectors that
/// reach outside the invariant subspace.
bool verify_identity_on_fock(int n, const std::vector<BigRational>& alphas) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i + 1;
  IndexSet I(idx);

  std::vector<BasisVector> samples;
  samples.push_back(vacuum());
  samples.push_back(BasisVector({n + 2}));
  samples.push_back(BasisVector({1, n + 1}));
  if (n >= 2) samples.push_back(BasisVector({2, n + 3, n + 5}));
  samples.push_back(BasisVector(idx));

  for (const auto& v : samples) {
    ExactVector state;
    state.emplace(v, BigRational(1));
    ExactVector acc;
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      state = apply_sum_exact(I, state);
      state = apply_sum_exact(I, state);  // two more powers of S_n
      for (const auto& [vec, c] : state) {
        auto it = acc.find(vec);
        BigRational add = alphas[k] * c;
        if (it == acc.end()) {
          if (add != 0) acc.emplace(vec, add);
        } else {
          it->second += add;
          if (it->second == 0) acc.erase(it);
        }
      }
    }
    if (acc.size() != 1) return false;
    auto it = acc.find(v);
    if (it == acc.end() || it->second != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<IdentityPolynomialSolution> identity_polynomial(
    int n, bool search_beyond_bound) {
  if (n < 1 || n > 6) throw CapError("identity_polynomial cap: 1 <= n <= 6");
  const int bound = (n - 1) * n / 2 + 1;
  // The minimal polynomial of the invariant block has degree 2^n, so no
  // identity can use fewer than 2^(n-1) even powers; searching further is
  // pointless.
  const int hard_cap = std::max(bound, 1 << (n - 1));
  const int search_cap = search_beyond_bound ? hard_cap : bound;

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i + 1;
  IntMatrix m = invariant_subspace_matrix(IndexSet(idx));
  const int d = m.rows();
  auto powers = even_powers(m, search_cap);

  for (int k_max = 1; k_max <= search_cap; ++k_max) {
    auto sol = solve_identity(powers, k_max, d);
    if (!sol) continue;
    IdentityPolynomialSolution out;
    out.alphas = *sol;
    out.terms = k_max;
    out.conjectured_bound = bound;
    out.within_conjectured_bound = k_max <= bound;
    out.fock_verified = verify_identity_on_fock(n, out.alphas);
    return out;
  }
  return std::nullopt;
}

ShiftMap::ShiftMap(std::vector<int> gaps_ascending)
    : gaps_(std::move(gaps_ascending)) {
  for (std::size_t k = 1; k < gaps_.size(); ++k)
    if (gaps_[k] <= gaps_[k - 1])
      throw Error("shift map gaps must be strictly increasing");
}

int ShiftMap::apply(int k) const {
  // theta_J = theta_{j_last} o ... o theta_{j_first}, j's ascending;
  // each theta_h shifts k -> k+1 for k >= h.
  for (int h : gaps_)
    if (k >= h) ++k;
  return k;
}

BasisVector ShiftMap::apply(const BasisVector& v) const {
  std::vector<int> out;
  out.reserve(v.indices.size());
  for (int i : v.indices) out.push_back(apply(i));
  return BasisVector(std::move(out));
}

GappedNormResult norm_of_gapped_sum(const IndexSet& I,
                                    const TruncationSpec& trunc,
                                    double tol) {
  if (I.max() > trunc.max_index)
    throw CapError("norm_of_gapped_sum: max index exceeds truncation");
  const int n = I.size();
  std::vector<int> contiguous(n);
  for (int i = 0; i < n; ++i) contiguous[i] = i + 1;
  IndexSet C(contiguous);

  GappedNormResult out;

  // J = {1..max(I)} \ I; theta_J must carry {1..n} onto I, and the induced
  // basis relabeling must be the graded-lex order isomorphism.
  std::vector<int> gaps;
  {
    std::size_t pos = 0;
    for (int k = 1; k <= I.max(); ++k) {
      if (pos < I.indices.size() && I.indices[pos] == k)
        ++pos;
      else
        gaps.push_back(k);
    }
  }
  ShiftMap theta(gaps);
  out.shift_map_consistent = true;
  for (int i = 0; i < n; ++i)
    if (theta.apply(i + 1) != I.indices[i]) out.shift_map_consistent = false;
  Basis contiguous_basis = enumerate_subsets(C);
  Basis gapped_basis = enumerate_subsets(I);
  for (int k = 0; k < contiguous_basis.dim() && out.shift_map_consistent; ++k) {
    if (!(theta.apply(contiguous_basis.at(k)) == gapped_basis.at(k)))
      out.shift_map_consistent = false;
  }

  IntMatrix block_gapped = invariant_subspace_matrix(I);
  IntMatrix block_contiguous = invariant_subspace_matrix(C);
  out.relabel_exact = (block_gapped == block_contiguous);
  if (!out.relabel_exact || !out.shift_map_consistent)
    throw StructureError("norm_of_gapped_sum: relabeling mismatch");

  SpectralDecomposition sd = eigen_decompose(block_gapped);
  out.norm = sd.eigenvalues.back();
  out.max_atom = static_cast<double>(max_atom_chain(n));
  out.matches_max_atom = std::abs(out.norm - out.max_atom) < tol;

  SparseOperator full = build_sum(I, trunc);
  SpectralDecomposition full_sd = eigen_decompose(full.to_dense());
  out.full_truncation_top = full_sd.eigenvalues.back();
  out.margin_ok = out.full_truncation_top <= out.norm + tol;
  return out;
}

bool CommutantOrbit::entry_vanishes_on_commutant(int i, int j) const {
  for (const auto& b : commutant_basis)
    if (b[static_cast<std::size_t>(i) * space_dim + j] != 0) return false;
  return true;
}

bool CommutantOrbit::entry_realized_on_commutant(int i, int j) const {
  return !entry_vanishes_on_commutant(i, j);
}

bool CommutantOrbit::coordinate_vanishes_on_orbit(int coord) const {
  for (const auto& v : orbit_basis)
    if (v[coord] != 0) return false;
  return true;
}

std::vector<std::vector<double>> CommutantOrbit::orbit_basis_unit() const {
  std::vector<std::vector<double>> out;
  for (const auto& v : orbit_basis) {
    std::vector<double> u(v.size());
    double norm2 = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      u[i] = v[i].convert_to<double>();
      norm2 += u[i] * u[i];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : u) c *= inv;
    out.push_back(std::move(u));
  }
  return out;
}

CommutantOrbit commutant_orbit(const IntMatrix& a, int cap) {
  const int d = a.rows();
  if (d > cap) throw CapError("commutant_orbit cap exceeded");
  if (!a.is_symmetric())
    throw StructureError("commutant_orbit requires a symmetric matrix");

  // [A, B] = 0 entrywise: sum_k A_ik B_kj - B_ik A_kj = 0.
  // Unknown B is vectorised row-major: var(i, j) = i*d + j.
  std::vector<SparseRow> rows;
  rows.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::map<int, BigRational> eq;
      for (int k = 0; k < d; ++k) {
        if (a.at(i, k) != 0) eq[k * d + j] += BigRational(a.at(i, k));
        if (a.at(k, j) != 0) eq[i * d + k] -= BigRational(a.at(k, j));
      }
      SparseRow row;
      for (auto& [c, v] : eq)
        if (v != 0) row.emplace_back(c, std::move(v));
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }

  CommutantOrbit out;
  out.space_dim = d;
  out.commutant_basis = sparse_nullspace(std::move(rows), d * d);

  std::vector<std::vector<BigRational>> first_columns;
  for (const auto& b : out.commutant_basis) {
    std::vector<BigRational> col(d);
    for (int i = 0; i < d; ++i) col[i] = b[static_cast<std::size_t>(i) * d];
    first_columns.push_back(std::move(col));
  }
  out.orbit_basis = orthogonalize(first_columns);
  return out;
}

IntMatrix counterexample_matrix() {
  // S_{1,3} on the 8 tuples over {1,2,3}, graded-lex: the action closes on
  // this set, so the dense restriction has no truncation artifacts.
  TruncationSpec trunc(3, 3);
  return build_sum(IndexSet({1, 3}), trunc).to_dense();
}

BigInt moment_oracle(int n, int k) {
  if (n < 1 || n > 16) throw CapError("moment_oracle cap: 1 <= n <= 16");
  if (k < 0 || k > 32) throw CapError("moment_oracle cap: 0 <= k <= 32");
  const std::size_t dim = std::size_t(1) << n;
  // Subspace basis indexed by bitmasks; bit (i-1) set means index i present.
  // S_n removes the lowest set bit (annihilation of the leading index) and
  // prepends any smaller index (creation).
  std::vector<BigInt> v(dim, BigInt(0)), w(dim, BigInt(0));
  v[0] = 1;
  for (int step = 0; step < k; ++step) {
    std::fill(w.begin(), w.end(), BigInt(0));
    for (std::size_t s = 0; s < dim; ++s) {
      if (v[s] == 0) continue;
      if (s != 0) {
        const std::size_t lowest = s & (~s + 1);
        w[s & (s - 1)] += v[s];
        for (std::size_t bit = 1; bit < lowest; bit <<= 1) w[s | bit] += v[s];
      } else {
        for (int i = 0; i < n; ++i) w[std::size_t(1) << i] += v[s];
      }
    }
    std::swap(v, w);
  }
  return v[0];
}

}  // namespace monofock
