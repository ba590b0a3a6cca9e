#pragma once

#include <string>
#include <vector>

#include "monofock/numeric.hpp"

namespace monofock {

/// Minimal complex arithmetic over BigFloat (std::complex is only
/// specified for the builtin floating types).
struct ComplexBF {
  BigFloat re;
  BigFloat im;

  ComplexBF() : re(0), im(0) {}
  ComplexBF(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  ComplexBF operator+(const ComplexBF& o) const { return {re + o.re, im + o.im}; }
  ComplexBF operator-(const ComplexBF& o) const { return {re - o.re, im - o.im}; }
  ComplexBF operator*(const ComplexBF& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexBF operator/(const ComplexBF& o) const {
    BigFloat d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  ComplexBF conj() const { return {re, -im}; }
  BigFloat abs() const { return sqrt(re * re + im * im); }
};

/// A finitely supported probability measure: sorted atoms with positive
/// weights summing to 1 (within the precision-derived tolerance).
struct AtomicMeasure {
  std::vector<BigFloat> atoms;    // strictly increasing
  std::vector<BigFloat> weights;  // positive
  unsigned precision_bits = 256;
  std::string label;

  std::size_t size() const { return atoms.size(); }
  bool is_symmetric(const BigFloat& tol) const;
};

/// Builds a validated measure: sorts atoms (carrying weights), rejects
/// atom collisions within 2^-(precision_bits-16) and total-mass deviations
/// beyond 2^(8-precision_bits).
AtomicMeasure make_atomic_measure(std::vector<BigFloat> atoms,
                                  std::vector<BigFloat> weights,
                                  unsigned precision_bits,
                                  std::string label = "");

/// Point mass at x.
AtomicMeasure dirac(const BigFloat& x, unsigned precision_bits,
                    std::string label = "");

/// mu_1 = (delta_1 + delta_{-1}) / 2, the symmetric Bernoulli law.
AtomicMeasure bernoulli_measure(unsigned precision_bits);

/// G_mu(z) = sum w_k / (z - r_k). Signals a pole error when a real z
/// collides with an atom.
ComplexBF cauchy_transform(const AtomicMeasure& mu, const ComplexBF& z);
BigFloat cauchy_transform(const AtomicMeasure& mu, const BigFloat& x);

/// H_mu = 1 / G_mu; signals a zero-division error when G vanishes.
ComplexBF reciprocal_cauchy(const AtomicMeasure& mu, const ComplexBF& z);
BigFloat reciprocal_cauchy(const AtomicMeasure& mu, const BigFloat& x);

/// The monotone convolution mu |> nu: the unique atomic measure rho with
/// H_rho = H_mu . H_nu. Atoms solve H_nu(r) = atom(mu); weights are the
/// residues w_mu / H_nu'(r).
AtomicMeasure monotone_convolve(const AtomicMeasure& mu,
                                const AtomicMeasure& nu);

/// k-th moment, sum w_j r_j^k.
BigFloat moment(const AtomicMeasure& mu, int k);

/// The standard arcsine law, density 1/(pi sqrt(2 - x^2)) on (-sqrt2, sqrt2).
struct ArcsineLaw {
  double cdf(double x) const;
  double quantile(double p) const;
  double density(double x) const;
  /// Total mass by composite Simpson quadrature after x = sqrt2 sin(theta).
  double mass_quadrature(int panels = 4096) const;
  /// Quantile discretisation with k equal weights (test helper).
  AtomicMeasure discretize(int k, unsigned precision_bits) const;
};

/// sup_x | CDF of (mu scaled by 1/scale) - arcsine CDF |, attained at the
/// rescaled atoms and their left limits.
double kolmogorov_distance(const AtomicMeasure& mu, const ArcsineLaw& law,
                           double scale);

/// JSON schema: {"atoms":[...], "weights":[...], "precision_bits":int,
/// "label":string}, atoms ascending.
std::string measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const std::string& text);

/// CSV: header "atom,weight" then one row per atom, 10 significant digits.
std::string measure_to_csv(const AtomicMeasure& mu);

}  // namespace monofock
