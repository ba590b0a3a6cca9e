#include "monofock/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "monofock/errors.hpp"

namespace monofock {

bool AtomicMeasure::is_symmetric(const BigFloat& tol) const {
  const std::size_t n = atoms.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (abs(atoms[k] + atoms[n - 1 - k]) > tol) return false;
    if (abs(weights[k] - weights[n - 1 - k]) > tol) return false;
  }
  return true;
}

AtomicMeasure make_atomic_measure(std::vector<BigFloat> atoms,
                                  std::vector<BigFloat> weights,
                                  unsigned precision_bits, std::string label) {
  if (atoms.size() != weights.size())
    throw Error("atoms and weights must have equal length");
  if (atoms.empty()) throw Error("measure must have at least one atom");

  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });

  AtomicMeasure mu;
  mu.precision_bits = precision_bits;
  mu.label = std::move(label);
  mu.atoms.reserve(atoms.size());
  mu.weights.reserve(atoms.size());
  for (std::size_t k : order) {
    mu.atoms.push_back(std::move(atoms[k]));
    mu.weights.push_back(std::move(weights[k]));
  }

  const BigFloat dedup_tol =
      pow2(-static_cast<long>(precision_bits > 16 ? precision_bits - 16 : 1));
  BigFloat mass = 0;
  for (std::size_t k = 0; k < mu.atoms.size(); ++k) {
    if (mu.weights[k] <= 0) throw Error("weights must be positive");
    if (k > 0 && mu.atoms[k] - mu.atoms[k - 1] <= dedup_tol)
      throw PrecisionError("atom collision within dedup tolerance");
    mass += mu.weights[k];
  }
  const BigFloat mass_tol = pow2(8 - static_cast<long>(precision_bits));
  if (abs(mass - 1) > mass_tol)
    throw Error("weights must sum to 1 within tolerance");
  return mu;
}

AtomicMeasure dirac(const BigFloat& x, unsigned precision_bits,
                    std::string label) {
  return make_atomic_measure({x}, {BigFloat(1)}, precision_bits,
                             std::move(label));
}

AtomicMeasure bernoulli_measure(unsigned precision_bits) {
  return make_atomic_measure({BigFloat(-1), BigFloat(1)},
                             {BigFloat(1) / 2, BigFloat(1) / 2},
                             precision_bits, "mu_1");
}

namespace {
BigFloat pole_tolerance(const AtomicMeasure& mu) {
  return pow2(-static_cast<long>(
      mu.precision_bits > 16 ? mu.precision_bits - 16 : 1));
}
}  // namespace

ComplexBF cauchy_transform(const AtomicMeasure& mu, const ComplexBF& z) {
  if (abs(z.im) == 0) {
    const BigFloat tol = pole_tolerance(mu);
    for (const auto& r : mu.atoms)
      if (abs(z.re - r) <= tol)
        throw PoleError("cauchy_transform evaluated at an atom");
  }
  ComplexBF acc;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    ComplexBF d{z.re - mu.atoms[k], z.im};
    acc = acc + ComplexBF{mu.weights[k], BigFloat(0)} / d;
  }
  return acc;
}

BigFloat cauchy_transform(const AtomicMeasure& mu, const BigFloat& x) {
  return cauchy_transform(mu, ComplexBF{x, BigFloat(0)}).re;
}

ComplexBF reciprocal_cauchy(const AtomicMeasure& mu, const ComplexBF& z) {
  ComplexBF g = cauchy_transform(mu, z);
  if (g.abs() == 0)
    throw PoleError("reciprocal_cauchy: Cauchy transform vanishes");
  return ComplexBF{BigFloat(1), BigFloat(0)} / g;
}

BigFloat reciprocal_cauchy(const AtomicMeasure& mu, const BigFloat& x) {
  return reciprocal_cauchy(mu, ComplexBF{x, BigFloat(0)}).re;
}

namespace {

// H_nu as a continuous increasing function on each interval between
// consecutive zeros of G_nu, with H(atom) = 0.
BigFloat h_continuous(const AtomicMeasure& nu, const BigFloat& x) {
  for (const auto& r : nu.atoms)
    if (x == r) return BigFloat(0);
  BigFloat g = 0;
  for (std::size_t k = 0; k < nu.size(); ++k)
    g += nu.weights[k] / (x - nu.atoms[k]);
  if (g == 0)
    throw PrecisionError("monotone_convolve: hit a pole of H exactly");
  return 1 / g;
}

BigFloat h_derivative(const AtomicMeasure& nu, const BigFloat& x) {
  BigFloat g = 0, gp = 0;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    BigFloat d = x - nu.atoms[k];
    g += nu.weights[k] / d;
    gp -= nu.weights[k] / (d * d);
  }
  return -gp / (g * g);
}

// Zeros of G_nu, one strictly inside each gap between consecutive atoms.
// G decreases from +inf to -inf across each gap.
std::vector<BigFloat> g_zeros(const AtomicMeasure& nu, unsigned bits) {
  std::vector<BigFloat> zeros;
  const BigFloat target = pow2(-static_cast<long>(bits));
  for (std::size_t k = 0; k + 1 < nu.size(); ++k) {
    BigFloat lo = nu.atoms[k], hi = nu.atoms[k + 1];
    while (hi - lo > target * (1 + abs(lo))) {
      BigFloat m = (lo + hi) / 2;
      BigFloat g = 0;
      for (std::size_t j = 0; j < nu.size(); ++j)
        g += nu.weights[j] / (m - nu.atoms[j]);
      if (g > 0)
        lo = m;
      else
        hi = m;
    }
    zeros.push_back((lo + hi) / 2);
  }
  return zeros;
}

// Solves H_nu(r) = a on the branch (lo, hi); H is increasing from -inf to
// +inf there.  Infinite ends are passed as unbounded flags.
BigFloat solve_branch(const AtomicMeasure& nu, const BigFloat& a,
                      BigFloat lo, bool lo_unbounded, BigFloat hi,
                      bool hi_unbounded, unsigned bits) {
  BigFloat span = nu.atoms.back() - nu.atoms.front() + 4 + abs(a);
  if (lo_unbounded) {
    lo = nu.atoms.front() - span;
    while (h_continuous(nu, lo) >= a) lo -= span;
  }
  if (hi_unbounded) {
    hi = nu.atoms.back() + span;
    while (h_continuous(nu, hi) <= a) hi += span;
  }
  const BigFloat target = pow2(-static_cast<long>(bits));
  // Endpoint H-limits are -inf (at lo) and +inf (at hi) on interior
  // branches, so plain bisection on sign(H - a) converges.
  while (hi - lo > target * (1 + abs(lo))) {
    BigFloat m = (lo + hi) / 2;
    if (m == lo || m == hi) break;  // precision floor
    if (h_continuous(nu, m) < a)
      lo = m;
    else
      hi = m;
  }
  return (lo + hi) / 2;
}

bool is_bernoulli(const AtomicMeasure& nu) {
  return nu.size() == 2 && nu.atoms[0] == -1 && nu.atoms[1] == 1 &&
         nu.weights[0] == nu.weights[1];
}

}  // namespace

AtomicMeasure monotone_convolve(const AtomicMeasure& mu,
                                const AtomicMeasure& nu) {
  const unsigned bits =
      std::min<unsigned>(mu.precision_bits, nu.precision_bits);
  const unsigned work = bits > 48 ? bits - 16 : bits / 2 + 8;
  std::vector<BigFloat> atoms, weights;
  atoms.reserve(mu.size() * nu.size());
  weights.reserve(mu.size() * nu.size());

  if (is_bernoulli(nu)) {
    // H_nu(z) = (z^2 - 1)/z: the fibers are the closed-form quadratic
    // r = (a +- sqrt(a^2 + 4)) / 2 and H' = 1 + 1/r^2.
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const BigFloat& a = mu.atoms[i];
      BigFloat disc = sqrt(a * a + 4);
      for (BigFloat r : {(a - disc) / 2, (a + disc) / 2}) {
        atoms.push_back(r);
        weights.push_back(mu.weights[i] * r * r / (1 + r * r));
      }
    }
  } else {
    auto zeros = g_zeros(nu, work);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const BigFloat& a = mu.atoms[i];
      for (std::size_t b = 0; b < nu.size(); ++b) {
        const bool first = (b == 0);
        const bool last = (b + 1 == nu.size());
        BigFloat r = solve_branch(nu, a, first ? BigFloat(0) : zeros[b - 1],
                                  first, last ? BigFloat(0) : zeros[b], last,
                                  work);
        BigFloat hp = h_derivative(nu, r);
        if (hp <= 0)
          throw PrecisionError("monotone_convolve: residue lost positivity");
        atoms.push_back(r);
        weights.push_back(mu.weights[i] / hp);
      }
    }
  }

  if (atoms.size() != mu.size() * nu.size())
    throw PrecisionError("monotone_convolve: root count mismatch");
  std::string label = (mu.label.empty() ? "mu" : mu.label) + " |> " +
                      (nu.label.empty() ? "nu" : nu.label);
  // Record the certified accuracy, not the storage precision: the root
  // bisection and residue arithmetic ran at `work` bits.
  const unsigned certified = work > 16 ? work - 16 : work;
  return make_atomic_measure(std::move(atoms), std::move(weights), certified,
                             std::move(label));
}

BigFloat moment(const AtomicMeasure& mu, int k) {
  if (k < 0) throw Error("moment order must be >= 0");
  if (k == 0) return BigFloat(1);  // probability measure by construction
  BigFloat acc = 0;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    BigFloat p = 1;
    for (int i = 0; i < k; ++i) p *= mu.atoms[j];
    acc += mu.weights[j] * p;
  }
  return acc;
}

double ArcsineLaw::cdf(double x) const {
  const double s = std::sqrt(2.0);
  if (x <= -s) return 0.0;
  if (x >= s) return 1.0;
  return 0.5 + std::asin(x / s) / M_PI;
}

double ArcsineLaw::quantile(double p) const {
  return std::sqrt(2.0) * std::sin(M_PI * (p - 0.5));
}

double ArcsineLaw::density(double x) const {
  if (x * x >= 2.0) return 0.0;
  return 1.0 / (M_PI * std::sqrt(2.0 - x * x));
}

double ArcsineLaw::mass_quadrature(int panels) const {
  // x = sqrt2 sin(theta) removes the endpoint singularity; the integrand
  // density(x(theta)) * x'(theta) is evaluated numerically, not cancelled.
  // The 1e-6 clip keeps 2 - x^2 representable; the clipped tails carry
  // mass 2e-6/pi.
  const double a = -M_PI / 2 + 1e-6, b = M_PI / 2 - 1e-6;
  const double h = (b - a) / panels;
  auto f = [&](double theta) {
    const double x = std::sqrt(2.0) * std::sin(theta);
    return density(x) * std::sqrt(2.0) * std::cos(theta);
  };
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i)
    acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

AtomicMeasure ArcsineLaw::discretize(int k, unsigned precision_bits) const {
  std::vector<BigFloat> atoms(k), weights(k, BigFloat(1) / k);
  for (int i = 0; i < k; ++i)
    atoms[i] = BigFloat(quantile((i + 0.5) / k));
  return make_atomic_measure(std::move(atoms), std::move(weights),
                             precision_bits, "arcsine-quantiles");
}

double kolmogorov_distance(const AtomicMeasure& mu, const ArcsineLaw& law,
                           double scale) {
  if (scale <= 0) throw Error("kolmogorov_distance requires scale > 0");
  double cum = 0.0;
  double dist = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double x = static_cast<double>(mu.atoms[k]) / scale;
    const double f = law.cdf(x);
    dist = std::max(dist, std::abs(f - cum));  // left limit
    cum += static_cast<double>(mu.weights[k]);
    dist = std::max(dist, std::abs(f - cum));  // value
  }
  return dist;
}

std::string measure_to_json(const AtomicMeasure& mu) {
  nlohmann::json j;
  j["atoms"] = nlohmann::json::array();
  j["weights"] = nlohmann::json::array();
  for (const auto& a : mu.atoms) j["atoms"].push_back(static_cast<double>(a));
  for (const auto& w : mu.weights)
    j["weights"].push_back(static_cast<double>(w));
  j["precision_bits"] = mu.precision_bits;
  j["label"] = mu.label;
  return j.dump();
}

AtomicMeasure measure_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<BigFloat> atoms, weights;
  for (const auto& a : j.at("atoms")) atoms.push_back(BigFloat(a.get<double>()));
  for (const auto& w : j.at("weights"))
    weights.push_back(BigFloat(w.get<double>()));
  return make_atomic_measure(std::move(atoms), std::move(weights),
                             j.at("precision_bits").get<unsigned>(),
                             j.value("label", ""));
}

std::string measure_to_csv(const AtomicMeasure& mu) {
  std::ostringstream os;
  os << "atom,weight\n";
  for (std::size_t k = 0; k < mu.size(); ++k)
    os << format_significant(mu.atoms[k]) << ','
       << format_significant(mu.weights[k]) << '\n';
  return os.str();
}

}  // namespace monofock
