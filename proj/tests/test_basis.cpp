#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monofock/basis.hpp"
#include "monofock/errors.hpp"

using namespace monofock;

TEST_CASE("enumeration is graded-lex with the vacuum first") {
  Basis b = enumerate_basis(TruncationSpec(2, 2));
  REQUIRE(b.dim() == 4);
  CHECK(b.at(0).is_vacuum());
  CHECK(b.at(1) == BasisVector({1}));
  CHECK(b.at(2) == BasisVector({2}));
  CHECK(b.at(3) == BasisVector({1, 2}));

  Basis b3 = enumerate_basis(TruncationSpec(3, 3));
  REQUIRE(b3.dim() == 8);
  CHECK(b3.at(7) == BasisVector({1, 2, 3}));
}

TEST_CASE("truncation dimension is the binomial sum") {
  // 1 + 8 + 28 + 56 + 70 computed by the binomial oracle below
  std::int64_t oracle = 0;
  std::int64_t binom = 1;
  for (int k = 0; k <= 4; ++k) {
    oracle += binom;
    binom = binom * (8 - k) / (k + 1);
  }
  CHECK(oracle == 163);
  TruncationSpec t(8, 4);
  CHECK(t.dimension() == 163);
  CHECK(enumerate_basis(t).dim() == 163);
}

TEST_CASE("annihilation acts on the leading index only") {
  BasisVector v({1, 2});
  auto w = annihilate(1, v);
  REQUIRE(w.has_value());
  CHECK(*w == BasisVector({2}));
  CHECK_FALSE(annihilate(2, v).has_value());
  CHECK_FALSE(annihilate(3, vacuum()).has_value());
}

TEST_CASE("creation prepends below the leading index") {
  auto w = create(1, BasisVector({2, 3}));
  REQUIRE(w.has_value());
  CHECK(*w == BasisVector({1, 2, 3}));
  CHECK_FALSE(create(2, BasisVector({1, 3})).has_value());
  auto z = create(5, vacuum());
  REQUIRE(z.has_value());
  CHECK(*z == BasisVector({5}));
}

TEST_CASE("right operators act on the trailing slot") {
  auto w = right_create(3, BasisVector({1, 2}));
  REQUIRE(w.has_value());
  CHECK(*w == BasisVector({1, 2, 3}));
  auto x = right_annihilate(3, BasisVector({1, 2, 3}));
  REQUIRE(x.has_value());
  CHECK(*x == BasisVector({1, 2}));
  CHECK_FALSE(right_create(2, BasisVector({1, 3})).has_value());
  CHECK_FALSE(right_annihilate(1, BasisVector({1, 3})).has_value());
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(BasisVector({2, 1}), Error);
  CHECK_THROWS_AS(BasisVector({0}), Error);
  CHECK_THROWS_AS(TruncationSpec(0, 1), Error);
  CHECK_THROWS_AS(IndexSet({}), Error);
  CHECK_THROWS_AS(IndexSet({3, 3}), Error);
  CHECK_THROWS_AS(annihilate(0, vacuum()), Error);
}

TEST_CASE("subset enumeration covers the invariant subspace") {
  Basis b = enumerate_subsets(IndexSet({1, 3}));
  REQUIRE(b.dim() == 4);
  CHECK(b.at(0).is_vacuum());
  CHECK(b.at(1) == BasisVector({1}));
  CHECK(b.at(2) == BasisVector({3}));
  CHECK(b.at(3) == BasisVector({1, 3}));
  CHECK(b.index_of(BasisVector({3})) == 2);
  CHECK(b.index_of(BasisVector({2})) == -1);
}
