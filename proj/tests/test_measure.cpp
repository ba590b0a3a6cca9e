#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monofock/errors.hpp"
#include "monofock/measure.hpp"

using namespace monofock;

namespace {
AtomicMeasure mu1() { return bernoulli_measure(working_precision()); }

double dd(const BigFloat& x) { return static_cast<double>(x); }
}  // namespace

TEST_CASE("cauchy transform of a point mass is 1/z") {
  AtomicMeasure d0 = dirac(BigFloat(0), 256);
  ComplexBF g = cauchy_transform(d0, ComplexBF{BigFloat(0), BigFloat(1)});
  CHECK(dd(g.re) == doctest::Approx(0.0).epsilon(1e-30));
  CHECK(dd(g.im) == doctest::Approx(-1.0));
}

TEST_CASE("cauchy transform of the Bernoulli law") {
  AtomicMeasure m = mu1();
  // hand evaluation: G(2) = (1/2)(1/1 + 1/3) = 2/3
  BigFloat g2 = cauchy_transform(m, BigFloat(2));
  CHECK(dd(g2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // hand evaluation: G(2i) = 2i/(-5)
  ComplexBF g2i = cauchy_transform(m, ComplexBF{BigFloat(0), BigFloat(2)});
  CHECK(dd(g2i.re) == doctest::Approx(0.0).epsilon(1e-30));
  CHECK(dd(g2i.im) == doctest::Approx(-0.4).epsilon(1e-15));
}

TEST_CASE("evaluation at an atom signals a pole") {
  CHECK_THROWS_AS(cauchy_transform(mu1(), BigFloat(1)), PoleError);
}

TEST_CASE("conjugation symmetry of the Cauchy transform") {
  AtomicMeasure m = mu1();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> real(-3.0, 3.0);
  std::uniform_real_distribution<double> imag(0.1, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexBF z{BigFloat(real(rng)), BigFloat(imag(rng))};
    ComplexBF a = cauchy_transform(m, z);
    ComplexBF b = cauchy_transform(m, z.conj());
    CHECK(abs(a.re - b.re) < pow2(-200));
    CHECK(abs(a.im + b.im) < pow2(-200));
  }
}

TEST_CASE("reciprocal cauchy transform") {
  AtomicMeasure m = mu1();
  // H(z) = (z^2-1)/z: H(2) = 3/2
  CHECK(dd(reciprocal_cauchy(m, BigFloat(2))) == doctest::Approx(1.5));
  // H of the point mass at 0 is the identity
  AtomicMeasure d0 = dirac(BigFloat(0), 256);
  CHECK(dd(reciprocal_cauchy(d0, BigFloat(2))) == doctest::Approx(2.0));
  // golden ratio fixed value: H(phi) = 1 since phi^2 - 1 = phi
  BigFloat phi = (1 + sqrt(BigFloat(5))) / 2;
  CHECK(abs(reciprocal_cauchy(m, phi) - 1) < pow2(-200));
}

TEST_CASE("monotone convolution with a point mass at zero is the identity") {
  AtomicMeasure m = mu1();
  AtomicMeasure d0 = dirac(BigFloat(0), 256);
  AtomicMeasure conv = monotone_convolve(m, d0);
  REQUIRE(conv.size() == 2);
  CHECK(abs(conv.atoms[0] + 1) < pow2(-180));
  CHECK(abs(conv.atoms[1] - 1) < pow2(-180));
  CHECK(abs(conv.weights[0] - BigFloat(0.5)) < pow2(-180));
}

TEST_CASE("mu_1 |> mu_1 gives the golden measure") {
  AtomicMeasure conv = monotone_convolve(mu1(), mu1());
  REQUIRE(conv.size() == 4);
  const double phi = 1.6180339887498948;
  const double psi = 0.6180339887498948;
  CHECK(dd(conv.atoms[0]) == doctest::Approx(-phi).epsilon(1e-14));
  CHECK(dd(conv.atoms[1]) == doctest::Approx(-psi).epsilon(1e-14));
  CHECK(dd(conv.atoms[2]) == doctest::Approx(psi).epsilon(1e-14));
  CHECK(dd(conv.atoms[3]) == doctest::Approx(phi).epsilon(1e-14));
  // weights fixed by the eigen oracle (outer atoms heavy)
  CHECK(dd(conv.weights[3]) == doctest::Approx(0.36180339887498948).epsilon(1e-14));
  CHECK(dd(conv.weights[2]) == doctest::Approx(0.13819660112501052).epsilon(1e-14));
  // atom phi weight equals 1/(2(1 + 1/phi^2))
  CHECK(dd(conv.weights[3]) ==
        doctest::Approx(1.0 / (2.0 * (1.0 + 1.0 / (phi * phi)))).epsilon(1e-14));
}

TEST_CASE("per-fiber mass conservation for the Bernoulli driver") {
  // children r+ and r- = -1/r+ of parent weight w carry w exactly
  AtomicMeasure conv = monotone_convolve(mu1(), mu1());
  BigFloat total = 0;
  for (const auto& w : conv.weights) total += w;
  CHECK(abs(total - 1) < pow2(-200));
}

TEST_CASE("general-driver convolution agrees with the Bernoulli fast path") {
  // mu_1 |> mu_2 exercised through the bisection route by perturbing
  // nothing: nu = mu_1 |> mu_1 has four atoms, so the general machinery runs.
  AtomicMeasure mu2 = monotone_convolve(mu1(), mu1());
  AtomicMeasure left = monotone_convolve(monotone_convolve(mu1(), mu1()), mu1());
  AtomicMeasure right = monotone_convolve(mu1(), mu2);
  REQUIRE(left.size() == 8);
  REQUIRE(right.size() == 8);
  const BigFloat tol = pow2(-static_cast<long>(working_precision() / 2));
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(abs(left.atoms[k] - right.atoms[k]) < tol);
    CHECK(abs(left.weights[k] - right.weights[k]) < tol);
  }
}

TEST_CASE("symmetry propagates through convolution with mu_1 on the left") {
  AtomicMeasure nu = monotone_convolve(mu1(), mu1());
  AtomicMeasure conv = monotone_convolve(mu1(), nu);
  CHECK(conv.is_symmetric(pow2(-100)));
}

TEST_CASE("moments") {
  AtomicMeasure m = mu1();
  CHECK(moment(m, 0) == 1);
  CHECK(moment(m, 1) == 0);
  CHECK(moment(m, 2) == 1);
  AtomicMeasure mu2 = monotone_convolve(m, m);
  CHECK(abs(moment(mu2, 2) - 2) < pow2(-180));
  CHECK(abs(moment(mu2, 4) - 5) < pow2(-180));
  CHECK(moment(mu2, 0) == 1);
}

TEST_CASE("arcsine law") {
  ArcsineLaw law;
  CHECK(law.cdf(-std::sqrt(2.0)) == 0.0);
  CHECK(law.cdf(std::sqrt(2.0)) == 1.0);
  CHECK(law.cdf(0.0) == doctest::Approx(0.5));
  CHECK(law.cdf(-1.0) == doctest::Approx(0.25));
  CHECK(law.mass_quadrature() == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(law.quantile(0.5) == doctest::Approx(0.0));
  CHECK(law.quantile(0.25) == doctest::Approx(-1.0));
}

TEST_CASE("kolmogorov distance") {
  ArcsineLaw law;
  SUBCASE("self-distance of the quantile discretisation is tiny") {
    AtomicMeasure q = law.discretize(10000, 64);
    CHECK(kolmogorov_distance(q, law, 1.0) < 1e-3);
  }
  SUBCASE("the Bernoulli law is far from arcsine") {
    CHECK(kolmogorov_distance(mu1(), law, 1.0) == doctest::Approx(0.25));
  }
}

TEST_CASE("json and csv round trips") {
  AtomicMeasure m = mu1();
  AtomicMeasure back = measure_from_json(measure_to_json(m));
  REQUIRE(back.size() == 2);
  CHECK(dd(back.atoms[0]) == -1.0);
  CHECK(dd(back.weights[1]) == 0.5);
  std::string csv = measure_to_csv(m);
  CHECK(csv == "atom,weight\n-1,0.5\n1,0.5\n");
}

TEST_CASE("measure validation") {
  CHECK_THROWS_AS(
      make_atomic_measure({BigFloat(1), BigFloat(1)},
                          {BigFloat(0.5), BigFloat(0.5)}, 256, ""),
      PrecisionError);
  CHECK_THROWS_AS(
      make_atomic_measure({BigFloat(0)}, {BigFloat(0.5)}, 256, ""), Error);
  CHECK_THROWS_AS(
      make_atomic_measure({BigFloat(0), BigFloat(1)},
                          {BigFloat(-0.25), BigFloat(1.25)}, 256, ""),
      Error);
}
