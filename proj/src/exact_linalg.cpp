#include "monofock/exact_linalg.hpp"

#include <algorithm>
#include <list>
#include <map>

#include "monofock/errors.hpp"

namespace monofock {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, BigInt(0)) {}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::multiply(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const BigInt& b = o.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("vector length mismatch");
  std::vector<BigInt> out(rows_, BigInt(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

void row_axpy(SparseRow& target, const BigRational& factor,
              const SparseRow& source) {
  // target += factor * source, keeping sorted-column form.
  SparseRow merged;
  merged.reserve(target.size() + source.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < source.size()) {
    if (b == source.size() ||
        (a < target.size() && target[a].first < source[b].first)) {
      merged.push_back(target[a++]);
    } else if (a == target.size() || source[b].first < target[a].first) {
      merged.emplace_back(source[b].first, factor * source[b].second);
      ++b;
    } else {
      BigRational v = target[a].second + factor * source[b].second;
      if (v != 0) merged.emplace_back(target[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  // factor could be zero in theory; drop explicit zeros from the merge.
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& p) { return p.second == 0; }),
               merged.end());
  target = std::move(merged);
}

}  // namespace

std::vector<std::vector<BigRational>> sparse_nullspace(
    std::vector<SparseRow> rows, int cols) {
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    r.erase(std::remove_if(r.begin(), r.end(),
                           [](const auto& p) { return p.second == 0; }),
            r.end());
  }

  // column -> indices of active rows containing it
  std::vector<std::vector<int>> col_rows(cols);
  auto rebuild_col_index = [&](int row_idx) {
    for (const auto& [c, v] : rows[row_idx]) col_rows[c].push_back(row_idx);
  };
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) rebuild_col_index(r);

  std::vector<char> processed(rows.size(), 0);
  std::vector<int> pivot_row_of_col(cols, -1);

  while (true) {
    // Pick the unprocessed nonempty row with fewest entries (Markowitz-lite).
    int best = -1;
    std::size_t best_nnz = 0;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (processed[r] || rows[r].empty()) continue;
      if (best == -1 || rows[r].size() < best_nnz) {
        best = r;
        best_nnz = rows[r].size();
      }
    }
    if (best == -1) break;

    // Choose the pivot column within the row that appears in fewest rows.
    int pivot_col = -1;
    std::size_t pivot_count = 0;
    for (const auto& [c, v] : rows[best]) {
      std::size_t live = 0;
      for (int r : col_rows[c])
        if (!processed[r] && !rows[r].empty()) ++live;
      if (pivot_col == -1 || live < pivot_count) {
        pivot_col = c;
        pivot_count = live;
      }
    }

    // Normalise the pivot row.
    BigRational pv;
    for (const auto& [c, v] : rows[best])
      if (c == pivot_col) pv = v;
    if (pv != 1) {
      for (auto& [c, v] : rows[best]) v /= pv;
    }
    processed[best] = 1;
    pivot_row_of_col[pivot_col] = best;

    // Eliminate pivot_col everywhere else (full Gauss-Jordan).
    std::vector<int> touch = col_rows[pivot_col];
    std::sort(touch.begin(), touch.end());
    touch.erase(std::unique(touch.begin(), touch.end()), touch.end());
    for (int r : touch) {
      if (r == best || rows[r].empty()) continue;
      BigRational coeff;
      bool has = false;
      for (const auto& [c, v] : rows[r]) {
        if (c == pivot_col) {
          coeff = v;
          has = true;
          break;
        }
      }
      if (!has) continue;
      row_axpy(rows[r], -coeff, rows[best]);
      rebuild_col_index(r);
    }
    col_rows[pivot_col].clear();
    col_rows[pivot_col].push_back(best);
  }

  // Free columns parameterise the nullspace.
  std::vector<std::vector<BigRational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_row_of_col[f] != -1) continue;
    std::vector<BigRational> x(cols, BigRational(0));
    x[f] = 1;
    for (int c = 0; c < cols; ++c) {
      int pr = pivot_row_of_col[c];
      if (pr == -1) continue;
      // pivot row: x_c + sum over free columns = 0
      for (const auto& [cc, v] : rows[pr]) {
        if (cc == f) x[c] = -v;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<BigRational>> solve_columns(
    const std::vector<std::vector<BigRational>>& columns,
    const std::vector<BigRational>& rhs) {
  const int k = static_cast<int>(columns.size());
  const int m = static_cast<int>(rhs.size());
  // Dense elimination over the (k+1)-wide augmented system.
  std::vector<std::vector<BigRational>> aug(m,
                                            std::vector<BigRational>(k + 1));
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(columns[j].size()) != m)
      throw Error("solve_columns: ragged input");
    for (int i = 0; i < m; ++i) aug[i][j] = columns[j][i];
  }
  for (int i = 0; i < m; ++i) aug[i][k] = rhs[i];

  int row = 0;
  std::vector<int> pivot_col_of_row;
  for (int col = 0; col < k && row < m; ++col) {
    int pr = -1;
    for (int i = row; i < m; ++i)
      if (aug[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr == -1) continue;
    std::swap(aug[row], aug[pr]);
    BigRational pv = aug[row][col];
    for (int j = col; j <= k; ++j) aug[row][j] /= pv;
    for (int i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      BigRational f = aug[i][col];
      for (int j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // Inconsistent if any remaining row is (0 ... 0 | nonzero).
  for (int i = row; i < m; ++i)
    if (aug[i][k] != 0) return std::nullopt;

  std::vector<BigRational> x(k, BigRational(0));
  for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = aug[r][k];
  return x;
}

std::vector<std::vector<BigRational>> orthogonalize(
    const std::vector<std::vector<BigRational>>& vectors) {
  std::vector<std::vector<BigRational>> basis;
  for (const auto& v : vectors) {
    std::vector<BigRational> u = v;
    for (const auto& b : basis) {
      BigRational num(0), den(0);
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (b[i] != 0) {
          num += v[i] * b[i];
          den += b[i] * b[i];
        }
      }
      if (num == 0) continue;
      BigRational f = num / den;
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= f * b[i];
    }
    bool nonzero = false;
    for (const auto& c : u)
      if (c != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) basis.push_back(std::move(u));
  }
  return basis;
}

int rank_of(const std::vector<std::vector<BigRational>>& vectors) {
  return static_cast<int>(orthogonalize(vectors).size());
}

}  // namespace monofock
