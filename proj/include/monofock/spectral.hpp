#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monofock/basis.hpp"
#include "monofock/exact_linalg.hpp"
#include "monofock/numeric.hpp"

namespace monofock {

/// Full eigen-decomposition of a symmetric integer matrix: ascending
/// eigenvalues and the squared vacuum (first) components of the
/// orthonormal eigenvectors.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<double> vacuum_weights;
  int dim = 0;
  double max_residual = 0.0;  // max |Av - lambda v| over all pairs
};

/// Dense symmetric solve in extended (long double) precision; throws on a
/// non-symmetric input or when the residual exceeds tol.
SpectralDecomposition eigen_decompose(const IntMatrix& m, double tol = 1e-12);

struct SpectrumSupportReport {
  bool ok = false;
  double max_atom_deviation = 0.0;
  double max_weight_deviation = 0.0;
  double min_vacuum_weight = 0.0;
  double norm_deviation = 0.0;  // |max eigenvalue - max_atom|
};

/// Finite shadow of "spectrum equals support": eigenvalues of the invariant
/// block equal the atoms of mu_n, vacuum weights are strictly positive, and
/// the top eigenvalue equals the largest atom (tolerance 1e-9).
SpectrumSupportReport spectrum_support_check(int n, double tol = 1e-9);

struct IdentityPolynomialSolution {
  std::vector<BigRational> alphas;  // alpha_{2k}, k = 1..terms
  int terms = 0;
  int conjectured_bound = 0;        // (n-1)n/2 + 1
  bool within_conjectured_bound = false;
  bool fock_verified = false;  // exact check on untruncated sample vectors
};

/// Minimal exact solution of sum_k alpha_{2k} S_n^{2k} = I on the invariant
/// subspace, searching term counts 1, 2, ... When search_beyond_bound is
/// false the search stops at the conjectured bound and returns nullopt if
/// nothing was found there (a failure report for the conjecture).
std::optional<IdentityPolynomialSolution> identity_polynomial(
    int n, bool search_beyond_bound = true);

/// The composed right-hand partial shift theta_J = theta_{j_last} o ... o
/// theta_{j_first}; order-preserving and injective, carries {1..n} onto
/// {1..m} \ J.
class ShiftMap {
 public:
  explicit ShiftMap(std::vector<int> gaps_ascending);
  int apply(int k) const;
  BasisVector apply(const BasisVector& v) const;

 private:
  std::vector<int> gaps_;
};

struct GappedNormResult {
  double norm = 0.0;           // top eigenvalue of the invariant block
  bool relabel_exact = false;  // block equals the contiguous block entrywise
  bool shift_map_consistent = false;
  double max_atom = 0.0;       // largest atom of mu_{|I|}
  bool matches_max_atom = false;
  double full_truncation_top = 0.0;
  bool margin_ok = false;  // full top <= block top + margin
};

/// Norm of S_I via the invariant block, the shift-relabeling check, and the
/// truncation-decay margin on the full truncated operator.
GappedNormResult norm_of_gapped_sum(const IndexSet& I,
                                    const TruncationSpec& trunc,
                                    double tol = 1e-9);

/// The commutant {B : [A,B] = 0} of a symmetric integer matrix, solved as
/// an exact rational nullspace, together with the orbit span {B e_0}.
struct CommutantOrbit {
  int space_dim = 0;
  /// Basis of the commutant, row-major vectorised d x d matrices.
  std::vector<std::vector<BigRational>> commutant_basis;
  /// Exact orthogonal (unnormalised) basis of span{B e_0}.
  std::vector<std::vector<BigRational>> orbit_basis;

  int orbit_dimension() const { return static_cast<int>(orbit_basis.size()); }
  /// True when entry (i, j) is zero for every commutant element (0-based).
  bool entry_vanishes_on_commutant(int i, int j) const;
  /// True when some commutant element has a nonzero (i, j) entry.
  bool entry_realized_on_commutant(int i, int j) const;
  /// True when coordinate `coord` of every orbit vector is exactly zero.
  bool coordinate_vanishes_on_orbit(int coord) const;
  /// Unit-normalised orbit vectors for reporting.
  std::vector<std::vector<double>> orbit_basis_unit() const;
};

CommutantOrbit commutant_orbit(const IntMatrix& a, int cap = 64);

/// The hermitian matrix of S_{1,3} on the 8 tuples over {1,2,3}
/// (the counterexample generator).
IntMatrix counterexample_matrix();

/// Exact integer vacuum moment (S_n^k)_{00} by sparse matrix-vector
/// products on the 2^n-dimensional invariant subspace.
BigInt moment_oracle(int n, int k);

}  // namespace monofock
