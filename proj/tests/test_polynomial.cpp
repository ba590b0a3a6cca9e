#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monofock/binomial.hpp"
#include "monofock/errors.hpp"
#include "monofock/measure.hpp"
#include "monofock/polynomial.hpp"

using namespace monofock;

namespace {
IntPoly poly(std::vector<BigInt> c) { return IntPoly(std::move(c)); }
}  // namespace

TEST_CASE("mgf recurrence seeds and known pairs") {
  RationalFn f1 = mgf_pair(1);
  CHECK(f1.numerator == IntPoly::constant(1));
  CHECK(f1.denominator == poly({1, 0, -1}));

  RationalFn f2 = mgf_pair(2);
  CHECK(f2.denominator == poly({1, 0, -3, 0, 1}));
  CHECK(f2.numerator == poly({1, 0, -1}));  // Q_2 = P_1

  RationalFn f3 = mgf_pair(3);
  CHECK(f3.denominator == poly({1, 0, -7, 0, 13, 0, -7, 0, 1}));
  CHECK(f3.numerator == poly({1, 0, -4, 0, 4, 0, -1}));

  // hand-convolved level 4 pair
  RationalFn f4 = mgf_pair(4);
  CHECK(f4.denominator ==
        poly({1, 0, -15, 0, 83, 0, -220, 0, 303, 0, -220, 0, 83, 0, -15, 0, 1}));
  CHECK(f4.numerator ==
        poly({1, 0, -11, 0, 45, 0, -88, 0, 88, 0, -45, 0, 11, 0, -1}));

  SUBCASE("degree consistency") {
    for (int m = 2; m <= 7; ++m) {
      RationalFn f = mgf_pair(m);
      CHECK(f.denominator.degree() == (1 << m));
      CHECK(f.numerator.degree() == (1 << m) - 2);
      CHECK(f.denominator.constant_term() == 1);
      CHECK(f.numerator.constant_term() == 1);
    }
  }

  SUBCASE("cap") { CHECK_THROWS_AS(mgf_pair(9), CapError); }
}

TEST_CASE("series expansion by exact long division") {
  CHECK(series_of(mgf_pair(1), 4).coeffs ==
        std::vector<BigRational>{1, 0, 1, 0, 1});
  CHECK(series_of(mgf_pair(2), 4).coeffs ==
        std::vector<BigRational>{1, 0, 2, 0, 5});
  CHECK(series_of(mgf_pair(3), 2).coeffs == std::vector<BigRational>{1, 0, 3});

  SUBCASE("odd coefficients vanish (measure symmetry)") {
    for (int m = 1; m <= 6; ++m) {
      TruncatedSeries s = series_of(mgf_pair(m), 21);
      for (int k = 1; k <= 21; k += 2) CHECK(s.coeffs[k] == 0);
    }
  }
}

TEST_CASE("T-recurrence routes agree and fold into the M series") {
  CHECK(t_recurrence_check(1, 8));
  CHECK(t_recurrence_check(2, 8));
  CHECK(t_recurrence_check(4, 16));

  SUBCASE("T_2 is the odd-Fibonacci series (1-t)/(1-3t+t^2)") {
    // independent oracle: c_0 = 1, c_1 = 2, c_n = 3c_{n-1} - c_{n-2}
    std::vector<BigRational> fib{1, 2};
    for (int k = 2; k <= 8; ++k)
      fib.push_back(3 * fib[k - 1] - fib[k - 2]);
    TruncatedSeries m2 = series_of(mgf_pair(2), 16);
    for (int k = 0; k <= 8; ++k) CHECK(m2.coeffs[2 * k] == fib[k]);
  }
}

TEST_CASE("sturm isolation") {
  SUBCASE("P_1 has exact roots at +-1") {
    auto roots = sturm_isolate(poly({1, 0, -1}));
    REQUIRE(roots.size() == 2);
    CHECK(refine_root(roots[0], 10) == -1);
    CHECK(refine_root(roots[1], 10) == 1);
  }

  SUBCASE("P_2 roots are the golden pairs") {
    auto roots = sturm_isolate(mgf_pair(2).denominator);
    REQUIRE(roots.size() == 4);
    BigFloat phi = refine_root(roots[3], 128);
    // (1+sqrt5)/2 to 40 digits
    BigFloat want = (1 + sqrt(BigFloat(5))) / 2;
    CHECK(abs(phi - want) < pow2(-120));
    BigFloat psi = refine_root(roots[2], 128);
    CHECK(abs(psi - (sqrt(BigFloat(5)) - 1) / 2) < pow2(-120));
  }

  SUBCASE("Q_2 positive root is exactly 1") {
    auto roots = sturm_isolate(mgf_pair(2).numerator);
    REQUIRE(roots.size() == 2);
    CHECK(refine_root(roots[1], 4) == 1);
  }

  SUBCASE("P_3 has 8 real roots; count equals degree") {
    const IntPoly& p3 = mgf_pair(3).denominator;
    CHECK(sturm_isolate(p3).size() == 8);
    CHECK(sturm_root_count(p3) == 8);
  }

  SUBCASE("non-squarefree input is a structural violation") {
    IntPoly sq = poly({1, 0, -1}) * poly({1, 0, -1});
    CHECK_THROWS_AS(sturm_isolate(sq), StructureError);
  }
}

TEST_CASE("root refinement reaches requested width") {
  auto roots = sturm_isolate(mgf_pair(2).denominator);
  RootInterval r = refine_interval(roots[3], 200);
  CHECK(r.hi - r.lo <= BigRational(1, BigInt(1) << 200));
}

TEST_CASE("interlacing and disjointness") {
  CHECK(interlacing_check(1));
  CHECK(interlacing_check(2));
  CHECK(interlacing_check(3));
  for (int n = 1; n <= 6; ++n) {
    RationalFn f = mgf_pair(n);
    CHECK(poly_gcd(f.denominator, f.numerator).degree() == 0);
  }
  CHECK_THROWS_AS(interlacing_check(7), CapError);
}

TEST_CASE("structure of P_{n+1}") {
  CHECK(structure_check(1));
  CHECK(structure_check(2));
  for (int n = 1; n <= 6; ++n) CHECK(structure_check(n));
  for (int n = 1; n <= 6; ++n)
    CHECK(mgf_pair(n + 1).numerator.constant_term() == 1);
}

TEST_CASE("palindromic roots come in inverse pairs") {
  for (int m = 2; m <= 5; ++m) {
    const IntPoly& p = mgf_pair(m).denominator;
    CHECK(p.is_palindromic());
    // exact reciprocal proportionality: t^deg * p(1/t) == p
    std::vector<BigInt> rev(p.coefficients().rbegin(), p.coefficients().rend());
    CHECK(IntPoly(std::move(rev)) == p);
  }
}

TEST_CASE("measure reconstruction from the polynomial route") {
  SUBCASE("m = 1 is the Bernoulli law") {
    AtomicMeasure mu = measure_from_polys(1);
    REQUIRE(mu.size() == 2);
    CHECK(abs(mu.atoms[0] + 1) < pow2(-200));
    CHECK(abs(mu.atoms[1] - 1) < pow2(-200));
    CHECK(abs(mu.weights[0] - BigFloat(0.5)) < pow2(-200));
  }

  SUBCASE("m = 2 matches the golden oracle layout") {
    AtomicMeasure mu = measure_from_polys(2);
    REQUIRE(mu.size() == 4);
    CHECK(std::abs(static_cast<double>(mu.atoms[3]) - 1.618033988749895) < 1e-14);
    CHECK(std::abs(static_cast<double>(mu.weights[3]) - 0.3618033988749895) < 1e-14);
    CHECK(std::abs(static_cast<double>(mu.weights[2]) - 0.1381966011250105) < 1e-14);
  }

  SUBCASE("m = 3 agrees with the recurrence route to 2^-64") {
    AtomicMeasure mu = measure_from_polys(3);
    BinomialLawRecord rec = binomial_measure(3);
    REQUIRE(mu.size() == rec.measure.size());
    const BigFloat tol = pow2(-64);
    for (std::size_t k = 0; k < mu.size(); ++k) {
      CHECK(abs(mu.atoms[k] - rec.measure.atoms[k]) < tol);
      CHECK(abs(mu.weights[k] - rec.measure.weights[k]) < tol);
    }
  }
}

TEST_CASE("poly json dump uses decimal strings") {
  CHECK(poly_to_json(poly({1, 0, -3, 0, 1})) ==
        "{\"degree\":4,\"coefficients\":[\"1\",\"0\",\"-3\",\"0\",\"1\"]}");
}

TEST_CASE("gcd of independent polynomials is constant") {
  IntPoly a = poly({-1, 0, 1});       // t^2 - 1
  IntPoly b = poly({2, 1});           // t + 2
  CHECK(poly_gcd(a, b).degree() == 0);
  IntPoly c = poly({-1, 1}) * poly({3, 1});
  IntPoly d = poly({-1, 1}) * poly({5, 1});
  IntPoly g = poly_gcd(c, d);
  CHECK(g == poly({-1, 1}));  // common factor recovered, positive leading
}
