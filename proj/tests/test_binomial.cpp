#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monofock/binomial.hpp"
#include "monofock/errors.hpp"
#include "monofock/spectral.hpp"

using namespace monofock;

namespace {
double dd(const BigFloat& x) { return static_cast<double>(x); }
}  // namespace

TEST_CASE("children atoms solve (r^2-1)/r = a") {
  SUBCASE("a = 1 gives the golden pair") {
    auto [lo, hi] = children_atoms(BigFloat(1));
    CHECK(dd(lo) == doctest::Approx(-0.6180339887498949).epsilon(1e-15));
    CHECK(dd(hi) == doctest::Approx(1.618033988749895).epsilon(1e-15));
  }
  SUBCASE("a = 0 is symmetric") {
    auto [lo, hi] = children_atoms(BigFloat(0));
    CHECK(lo == -1);
    CHECK(hi == 1);
  }
  SUBCASE("a = -1 is the sign flip of a = 1") {
    auto [lo, hi] = children_atoms(BigFloat(-1));
    CHECK(dd(lo) == doctest::Approx(-1.618033988749895).epsilon(1e-15));
    CHECK(dd(hi) == doctest::Approx(0.6180339887498949).epsilon(1e-15));
  }
  SUBCASE("product of the two children is -1") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    for (int t = 0; t < 500; ++t) {
      auto [lo, hi] = children_atoms(BigFloat(dist(rng)));
      CHECK(abs(lo * hi + 1) < pow2(-200));
    }
  }
}

TEST_CASE("child weight residue rule") {
  BigFloat phi = (1 + sqrt(BigFloat(5))) / 2;
  BigFloat psi = (sqrt(BigFloat(5)) - 1) / 2;
  CHECK(dd(child_weight(BigFloat(1) / 2, phi)) ==
        doctest::Approx(0.3618033988749895).epsilon(1e-15));
  CHECK(dd(child_weight(BigFloat(1) / 2, -psi)) ==
        doctest::Approx(0.1381966011250105).epsilon(1e-15));
  SUBCASE("children of one parent carry the parent weight") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(0.05, 8.0);
    for (int t = 0; t < 500; ++t) {
      BigFloat r(dist(rng));
      BigFloat w(0.37);
      CHECK(abs(child_weight(w, r) + child_weight(w, -1 / r) - w) < pow2(-200));
    }
  }
  CHECK_THROWS_AS(child_weight(BigFloat(1), BigFloat(0)), Error);
}

TEST_CASE("binomial measure base cases") {
  BinomialLawRecord r1 = binomial_measure(1);
  CHECK(r1.measure.atoms == std::vector<BigFloat>{BigFloat(-1), BigFloat(1)});
  CHECK(r1.measure.weights ==
        std::vector<BigFloat>{BigFloat(1) / 2, BigFloat(1) / 2});
  CHECK(r1.max_atom == 1);

  BinomialLawRecord r2 = binomial_measure(2);
  REQUIRE(r2.measure.size() == 4);
  // sorted atoms -phi < -psi < psi < phi; weight layout fixed by the
  // eigen oracle: outer pair carries 0.3618..., inner pair 0.1381...
  CHECK(dd(r2.measure.atoms[0]) == doctest::Approx(-1.618033988749895));
  CHECK(dd(r2.measure.atoms[1]) == doctest::Approx(-0.6180339887498949));
  CHECK(dd(r2.measure.weights[0]) == doctest::Approx(0.3618033988749895));
  CHECK(dd(r2.measure.weights[1]) == doctest::Approx(0.1381966011250105));
  CHECK(dd(r2.measure.weights[2]) == doctest::Approx(0.1381966011250105));
  CHECK(dd(r2.measure.weights[3]) == doctest::Approx(0.3618033988749895));

  BinomialLawRecord r3 = binomial_measure(3);
  CHECK(r3.measure.size() == 8);
  CHECK(r3.lower_bound <= r3.max_atom);
  CHECK(r3.max_atom < r3.upper_bound);
  CHECK(dd(r3.lower_bound) == doctest::Approx(std::sqrt(6.0 - std::sqrt(6.0))));
  CHECK(dd(r3.upper_bound) == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("atom count and symmetry invariants") {
  for (int n = 1; n <= 12; ++n) {
    BinomialLawRecord rec = binomial_measure(n);
    CHECK(rec.measure.size() == (std::size_t(1) << n));
    CHECK(rec.measure.is_symmetric(pow2(-100)));
    for (std::size_t k = 1; k < rec.measure.size(); ++k)
      CHECK(rec.measure.atoms[k] > rec.measure.atoms[k - 1]);
  }
}

TEST_CASE("binomial cap") {
  CHECK_THROWS_AS(binomial_measure(25), CapError);
  CHECK_THROWS_AS(binomial_measure(0), Error);
}

TEST_CASE("max atom chain equals the measure maximum") {
  for (int n = 1; n <= 12; ++n) {
    BinomialLawRecord rec = binomial_measure(n);
    CHECK(abs(rec.max_atom - max_atom_chain(n)) < pow2(-200));
  }
}

TEST_CASE("endpoint bounds") {
  auto [l1, u1] = endpoint_bounds(1);
  CHECK(dd(l1) == doctest::Approx(std::sqrt(2.0 - std::sqrt(2.0))));
  CHECK(dd(u1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(l1 <= 1);
  CHECK(BigFloat(1) < u1);

  auto [l2, u2] = endpoint_bounds(2);
  CHECK(dd(l2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(u2 == 2);

  auto [l20, u20] = endpoint_bounds(20);
  CHECK(dd(l20) == doctest::Approx(std::sqrt(40.0 - std::sqrt(40.0))));
  CHECK(dd(u20) == doctest::Approx(std::sqrt(40.0)));
}

TEST_CASE("paper weight formula as printed (diagnostic only)") {
  BinomialLawRecord r2 = binomial_measure(2);
  BinomialLawRecord r1 = binomial_measure(1);
  // at the atom phi (sorted index 3): 1/(4 sqrt 5)
  BigFloat w = paper_weight_formula(3, r2.measure.atoms, r1.measure.atoms);
  CHECK(dd(w) == doctest::Approx(0.1118033988749895).epsilon(1e-14));
  // the printed formula's absolute values sum to 1/sqrt(5), not 1
  BigFloat abs_sum = 0, sum = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    BigFloat v = paper_weight_formula(k, r2.measure.atoms, r1.measure.atoms);
    sum += v;
    abs_sum += abs(v);
  }
  CHECK(dd(abs_sum) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
  CHECK(abs(sum) < pow2(-200));  // signed values cancel entirely
  SUBCASE("degenerate input is rejected") {
    CHECK_THROWS_AS(
        paper_weight_formula(0, r2.measure.atoms, r2.measure.atoms), Error);
  }
}

TEST_CASE("oracle equivalence against the eigen route") {
  for (int n = 1; n <= 7; ++n) {
    SpectrumSupportReport rep = spectrum_support_check(n);
    CHECK(rep.ok);
    CHECK(rep.max_atom_deviation < 1e-9);
    CHECK(rep.max_weight_deviation < 1e-9);
  }
}

TEST_CASE("clt table") {
  auto rows = clt_table(12);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].n == 1);
  CHECK(rows[0].max_atom == doctest::Approx(1.0));
  CHECK(rows[0].ratio == doctest::Approx(1.0));
  const double sqrt2 = std::sqrt(2.0);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].ratio > rows[k - 1].ratio);
    CHECK(rows[k].ratio < sqrt2);
  }
  SUBCASE("csv header and row shape") {
    std::string csv = clt_csv(rows);
    CHECK(csv.rfind("n,max_atom,ratio,ks_distance\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
  }
}

TEST_CASE("streaming generation visits every level once") {
  std::vector<int> seen;
  binomial_sequence(6, [&](const BinomialLawRecord& rec) {
    seen.push_back(rec.n);
    CHECK(rec.measure.size() == (std::size_t(1) << rec.n));
  });
  CHECK(seen == std::vector<int>{1, 2, 3, 4, 5, 6});
}
