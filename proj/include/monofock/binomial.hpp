#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "monofock/measure.hpp"
#include "monofock/numeric.hpp"

namespace monofock {

/// The vacuum law of S_n together with its support summary.
struct BinomialLawRecord {
  int n = 0;
  AtomicMeasure measure;
  BigFloat max_atom;
  BigFloat lower_bound;  // sqrt(2n - sqrt(2n))
  BigFloat upper_bound;  // sqrt(2n)
};

/// The two solutions of (r^2 - 1)/r = a, ascending; their product is -1.
std::pair<BigFloat, BigFloat> children_atoms(const BigFloat& a);

/// Residue weight rule: w_parent * r^2 / (1 + r^2).
BigFloat child_weight(const BigFloat& w_parent, const BigFloat& r_child);

/// (sqrt(2n - sqrt(2n)), sqrt(2n)).
std::pair<BigFloat, BigFloat> endpoint_bounds(int n);

/// Largest atom of mu_n by iterating the increasing child branch alone.
BigFloat max_atom_chain(int n);

/// (2/sqrt(n) - 1/sqrt(n+1)) * max_atom(n) < sqrt((max_atom(n)^2 + 4)/(n+1)),
/// the inequality behind the increasing rescaled-endpoint sequence.
bool max_atom_ratio_inequality(int n);

/// mu_n with exactly 2^n atoms, built by n-1 applications of the atom
/// recurrence from the Bernoulli seed. Atoms above n = 20 are generated in
/// double precision (the record's precision_bits says so).
BinomialLawRecord binomial_measure(int n, int cap = 24);

/// Streaming variant: builds generations 1..max_n once, invoking the
/// callback with each record before the next generation replaces it.
void binomial_sequence(int max_n,
                       const std::function<void(const BinomialLawRecord&)>& visit,
                       int cap = 24);

/// Eq-as-printed weight formula, kept for the diagnostic comparison:
///   prod_h (r_k - r_h^{prev}) / (2 prod_{h != k} (r_k - r_h)).
/// Defined for n >= 2; the printed formula does not reproduce the verified
/// weights (see the flagged entry in the verification report).
BigFloat paper_weight_formula(std::size_t k, const std::vector<BigFloat>& atoms_n,
                              const std::vector<BigFloat>& atoms_prev);

struct CltRow {
  int n;
  double max_atom;
  double ratio;        // max_atom / sqrt(n), strictly increasing, < sqrt(2)
  double ks_distance;  // Kolmogorov distance of mu_n(/sqrt n) to arcsine
};

/// Rows n = 1..max_n. Distances are computed from a double-precision
/// generation pass (streaming; memory stays one generation).
std::vector<CltRow> clt_table(int max_n, int cap = 24);

/// CSV: n,max_atom,ratio,ks_distance.
std::string clt_csv(const std::vector<CltRow>& rows);

}  // namespace monofock
