#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monofock/errors.hpp"
#include "monofock/operators.hpp"

using namespace monofock;

namespace {
std::shared_ptr<const Basis> basis_of(const TruncationSpec& t) {
  return std::make_shared<Basis>(enumerate_basis(t));
}
}  // namespace

TEST_CASE("s_1 on the 2-dimensional truncation is the Bernoulli generator") {
  TruncationSpec t(1, 1);
  SparseOperator s1 = build_position(1, t);
  REQUIRE(s1.dim() == 2);
  CHECK(s1.entry(0, 1) == 1);
  CHECK(s1.entry(1, 0) == 1);
  CHECK(s1.entry(0, 0) == 0);
  CHECK(s1.entry(1, 1) == 0);
  CHECK(s1.is_symmetric());
}

TEST_CASE("s_2 kills e_1 in the (N=2,L=2) truncation") {
  TruncationSpec t(2, 2);
  auto b = basis_of(t);
  SparseOperator s2 = build_position(2, t, b);
  int col = b->index_of(BasisVector({1}));
  CHECK(s2.column(col).empty());
}

TEST_CASE("right position operator maps the hand oracle") {
  // b/b† rules applied by hand: r_2 swaps vacuum <-> (2) and (1) <-> (1,2)
  TruncationSpec t(2, 2);
  auto b = basis_of(t);
  SparseOperator r2 = build_right_position(2, t, b);
  int v0 = b->index_of(vacuum());
  int v2 = b->index_of(BasisVector({2}));
  int v1 = b->index_of(BasisVector({1}));
  int v12 = b->index_of(BasisVector({1, 2}));
  CHECK(r2.entry(v2, v0) == 1);
  CHECK(r2.entry(v0, v2) == 1);
  CHECK(r2.entry(v12, v1) == 1);
  CHECK(r2.entry(v1, v12) == 1);
  CHECK(r2.is_symmetric());
}

TEST_CASE("S_2 on the hand-checked 4-dimensional basis") {
  // hand application of the creation/annihilation rules:
  // S omega = e1 + e2, S e1 = omega, S e2 = omega + e12, S e12 = e2
  TruncationSpec t(2, 2);
  auto b = basis_of(t);
  SparseOperator s = build_sum(IndexSet({1, 2}), t, b);
  const std::int64_t want[4][4] = {
      {0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(s.entry(i, j) == want[i][j]);
}

TEST_CASE("index above the truncation is a cap violation") {
  TruncationSpec t(2, 2);
  CHECK_THROWS_AS(build_position(3, t), CapError);
  CHECK_THROWS_AS(build_sum(IndexSet({1, 3}), t), CapError);
}

TEST_CASE("invariant subspace matrix is the exact 4x4 block") {
  IntMatrix m = invariant_subspace_matrix(IndexSet({1, 2}));
  REQUIRE(m.rows() == 4);
  const int want[4][4] = {{0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m.at(i, j) == want[i][j]);
  CHECK(m.is_symmetric());

  SUBCASE("single index gives the Bernoulli block") {
    IntMatrix one = invariant_subspace_matrix(IndexSet({1}));
    CHECK(one.rows() == 2);
    CHECK(one.at(0, 1) == 1);
    CHECK(one.at(1, 0) == 1);
  }

  SUBCASE("the block depends only on the index count") {
    CHECK(invariant_subspace_matrix(IndexSet({1, 3})) == m);
    CHECK(invariant_subspace_matrix(IndexSet({4, 9})) == m);
  }

  SUBCASE("cap is enforced") {
    std::vector<int> big;
    for (int i = 1; i <= 21; ++i) big.push_back(i);
    CHECK_THROWS_AS(invariant_subspace_matrix(IndexSet(big)), CapError);
  }
}

TEST_CASE("dropped columns mark truncation boundary creations") {
  TruncationSpec t(2, 1);  // creations out of level-1 vectors leave L=1
  auto b = basis_of(t);
  SparseOperator c1 = build_elementary(ElementaryKind::Creator, 1, t, b);
  int col = b->index_of(BasisVector({2}));
  CHECK(c1.column_dropped(col));
  CHECK_FALSE(c1.column_dropped(b->index_of(vacuum())));
}

TEST_CASE("commutators on safe vectors") {
  TruncationSpec t(6, 4);
  auto b = basis_of(t);

  SUBCASE("[s_1, r_3] vanishes") {
    auto c = commutator_on_safe_vectors(build_position(1, t, b),
                                        build_right_position(3, t, b));
    REQUIRE(c.has_value());
    CHECK(*c == 0);
  }

  SUBCASE("[s_2, r_1] does not vanish (order matters)") {
    auto c = commutator_on_safe_vectors(build_position(2, t, b),
                                        build_right_position(1, t, b));
    REQUIRE(c.has_value());
    CHECK(*c > 0);
  }

  SUBCASE("self-commutator vanishes") {
    auto s3 = build_position(3, t, b);
    auto c = commutator_on_safe_vectors(s3, s3);
    REQUIRE(c.has_value());
    CHECK(*c == 0);
  }
}

TEST_CASE("exact untruncated action agrees with the matrix on safe columns") {
  TruncationSpec t(4, 4);
  auto b = basis_of(t);
  IndexSet I({1, 2, 3});
  SparseOperator s = build_sum(I, t, b);
  for (int col = 0; col < b->dim(); ++col) {
    auto safe = safe_apply_word({&s}, col);
    if (!safe) continue;
    ExactVector v;
    v.emplace(b->at(col), BigRational(1));
    ExactVector image = apply_sum_exact(I, v);
    CHECK(image.size() == safe->size());
    for (const auto& [vec, coeff] : image) {
      int row = b->index_of(vec);
      REQUIRE(row >= 0);
      CHECK(BigRational((*safe)[row]) == coeff);
    }
  }
}
