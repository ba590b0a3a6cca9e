#pragma once

#include <optional>
#include <vector>

#include "monofock/numeric.hpp"

namespace monofock {

/// Dense matrix with arbitrary-precision integer entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const BigInt& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const;
  bool is_symmetric() const;
  IntMatrix multiply(const IntMatrix& o) const;
  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// One sparse row of a rational linear system: sorted (column, value) pairs.
using SparseRow = std::vector<std::pair<int, BigRational>>;

/// Exact nullspace of a sparse rational system with `cols` unknowns.
/// Returns a basis of the solution space, each vector dense of length cols.
/// Gauss-Jordan elimination with exact pivoting; rows may be rank deficient.
std::vector<std::vector<BigRational>> sparse_nullspace(
    std::vector<SparseRow> rows, int cols);

/// Exact solution of (dense columns) * x = rhs, if one exists.
/// `columns[j]` is the j-th column, all of equal length.
std::optional<std::vector<BigRational>> solve_columns(
    const std::vector<std::vector<BigRational>>& columns,
    const std::vector<BigRational>& rhs);

/// Gram-Schmidt without normalisation: returns an exact orthogonal basis of
/// the span (rational entries, zero vectors dropped).
std::vector<std::vector<BigRational>> orthogonalize(
    const std::vector<std::vector<BigRational>>& vectors);

/// Rank of a collection of dense rational vectors.
int rank_of(const std::vector<std::vector<BigRational>>& vectors);

}  // namespace monofock
