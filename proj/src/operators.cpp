#include "monofock/operators.hpp"

#include <algorithm>
#include <cstdlib>

#include "monofock/errors.hpp"

namespace monofock {

SparseOperator::SparseOperator(std::shared_ptr<const Basis> basis)
    : basis_(std::move(basis)),
      columns_(basis_->dim()),
      dropped_(basis_->dim(), 0) {}

void SparseOperator::add_entry(int row, int col, std::int64_t value) {
  if (value == 0) return;
  auto& column = columns_[col];
  for (auto& [r, v] : column) {
    if (r == row) {
      v += value;
      if (v == 0)
        column.erase(std::remove_if(column.begin(), column.end(),
                                    [row](const auto& p) { return p.first == row; }),
                     column.end());
      return;
    }
  }
  column.emplace_back(row, value);
}

std::int64_t SparseOperator::entry(int row, int col) const {
  for (const auto& [r, v] : columns_[col])
    if (r == row) return v;
  return 0;
}

bool SparseOperator::is_symmetric() const {
  for (int j = 0; j < dim(); ++j)
    for (const auto& [i, v] : columns_[j])
      if (entry(j, i) != v) return false;
  return true;
}

bool SparseOperator::columns_are_partial_permutation() const {
  for (int j = 0; j < dim(); ++j) {
    if (columns_[j].size() > 1) return false;
    if (columns_[j].size() == 1 && columns_[j][0].second != 1) return false;
  }
  return true;
}

SparseOperator SparseOperator::sum_with(const SparseOperator& o) const {
  if (basis_ != o.basis_ && dim() != o.dim())
    throw Error("operator sum over different bases");
  SparseOperator out(basis_);
  for (int j = 0; j < dim(); ++j) {
    for (const auto& [i, v] : columns_[j]) out.add_entry(i, j, v);
    for (const auto& [i, v] : o.columns_[j]) out.add_entry(i, j, v);
    if (dropped_[j] || o.dropped_[j]) out.mark_dropped(j);
  }
  return out;
}

IntMatrix SparseOperator::to_dense() const {
  IntMatrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j)
    for (const auto& [i, v] : columns_[j]) m.at(i, j) = v;
  return m;
}

namespace {
std::shared_ptr<const Basis> ensure_basis(const TruncationSpec& trunc,
                                          std::shared_ptr<const Basis> basis) {
  if (basis) return basis;
  return std::make_shared<Basis>(enumerate_basis(trunc));
}
}  // namespace

SparseOperator build_elementary(ElementaryKind kind, int i,
                                const TruncationSpec& trunc,
                                std::shared_ptr<const Basis> basis) {
  if (i > trunc.max_index)
    throw CapError("operator index " + std::to_string(i) +
                   " exceeds truncation max_index " +
                   std::to_string(trunc.max_index));
  auto b = ensure_basis(trunc, std::move(basis));
  SparseOperator op(b);
  for (int j = 0; j < b->dim(); ++j) {
    const BasisVector& v = b->at(j);
    std::optional<BasisVector> image;
    bool is_creation = false;
    switch (kind) {
      case ElementaryKind::Annihilator:
        image = annihilate(i, v);
        break;
      case ElementaryKind::Creator:
        image = create(i, v);
        is_creation = true;
        break;
      case ElementaryKind::RightAnnihilator:
        image = right_annihilate(i, v);
        break;
      case ElementaryKind::RightCreator:
        image = right_create(i, v);
        is_creation = true;
        break;
    }
    if (!image) continue;
    int row = b->index_of(*image);
    if (row < 0) {
      if (is_creation && !trunc.contains(*image)) {
        op.mark_dropped(j);
        continue;
      }
      throw Error("operator image missing from basis");
    }
    op.add_entry(row, j, 1);
  }
  return op;
}

SparseOperator build_position(int i, const TruncationSpec& trunc,
                              std::shared_ptr<const Basis> basis) {
  auto b = ensure_basis(trunc, std::move(basis));
  return build_elementary(ElementaryKind::Annihilator, i, trunc, b)
      .sum_with(build_elementary(ElementaryKind::Creator, i, trunc, b));
}

SparseOperator build_right_position(int i, const TruncationSpec& trunc,
                                    std::shared_ptr<const Basis> basis) {
  auto b = ensure_basis(trunc, std::move(basis));
  return build_elementary(ElementaryKind::RightAnnihilator, i, trunc, b)
      .sum_with(build_elementary(ElementaryKind::RightCreator, i, trunc, b));
}

SparseOperator build_sum(const IndexSet& I, const TruncationSpec& trunc,
                         std::shared_ptr<const Basis> basis) {
  if (I.max() > trunc.max_index)
    throw CapError("index set exceeds truncation max_index");
  auto b = ensure_basis(trunc, std::move(basis));
  SparseOperator acc = build_position(I.indices[0], trunc, b);
  for (std::size_t k = 1; k < I.indices.size(); ++k)
    acc = acc.sum_with(build_position(I.indices[k], trunc, b));
  return acc;
}

IntMatrix invariant_subspace_matrix(const IndexSet& I, int cap) {
  if (I.size() > cap)
    throw CapError("invariant subspace cap exceeded: |I| = " +
                   std::to_string(I.size()));
  Basis b = enumerate_subsets(I);
  IntMatrix m(b.dim(), b.dim());
  for (int j = 0; j < b.dim(); ++j) {
    const BasisVector& v = b.at(j);
    for (int i : I.indices) {
      if (auto w = annihilate(i, v)) m.at(b.index_of(*w), j) += 1;
      if (auto w = create(i, v)) m.at(b.index_of(*w), j) += 1;
    }
  }
  return m;
}

std::optional<std::map<int, std::int64_t>> safe_apply_word(
    const std::vector<const SparseOperator*>& ops, int j) {
  std::map<int, std::int64_t> current;
  current[j] = 1;
  for (const SparseOperator* op : ops) {
    std::map<int, std::int64_t> next;
    for (const auto& [col, coeff] : current) {
      if (op->column_dropped(col)) return std::nullopt;
      for (const auto& [row, v] : op->column(col)) {
        next[row] += coeff * v;
        if (next[row] == 0) next.erase(row);
      }
    }
    current = std::move(next);
  }
  return current;
}

std::map<int, std::int64_t> apply_word_matrix(
    const std::vector<const SparseOperator*>& ops, int j) {
  std::map<int, std::int64_t> current;
  current[j] = 1;
  for (const SparseOperator* op : ops) {
    std::map<int, std::int64_t> next;
    for (const auto& [col, coeff] : current) {
      for (const auto& [row, v] : op->column(col)) {
        next[row] += coeff * v;
        if (next[row] == 0) next.erase(row);
      }
    }
    current = std::move(next);
  }
  return current;
}

std::optional<std::int64_t> commutator_on_safe_vectors(const SparseOperator& a,
                                                       const SparseOperator& b) {
  if (a.dim() != b.dim())
    throw Error("commutator over different bases");
  std::optional<std::int64_t> max_abs;
  for (int j = 0; j < a.dim(); ++j) {
    auto ab = safe_apply_word({&b, &a}, j);  // A(B e_j)
    auto ba = safe_apply_word({&a, &b}, j);  // B(A e_j)
    if (!ab || !ba) continue;
    std::map<int, std::int64_t> diff = *ab;
    for (const auto& [row, v] : *ba) {
      diff[row] -= v;
      if (diff[row] == 0) diff.erase(row);
    }
    std::int64_t column_max = 0;
    for (const auto& [row, v] : diff)
      column_max = std::max(column_max, std::abs(v));
    if (!max_abs || column_max > *max_abs) max_abs = column_max;
  }
  return max_abs;
}

namespace {
void accumulate(ExactVector& out, const std::optional<BasisVector>& w,
                const BigRational& coeff) {
  if (!w) return;
  auto it = out.find(*w);
  if (it == out.end()) {
    out.emplace(*w, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) out.erase(it);
  }
}
}  // namespace

ExactVector apply_position_exact(int i, const ExactVector& v) {
  ExactVector out;
  for (const auto& [vec, coeff] : v) {
    accumulate(out, annihilate(i, vec), coeff);
    accumulate(out, create(i, vec), coeff);
  }
  return out;
}

ExactVector apply_sum_exact(const IndexSet& I, const ExactVector& v) {
  ExactVector out;
  for (const auto& [vec, coeff] : v) {
    for (int i : I.indices) {
      accumulate(out, annihilate(i, vec), coeff);
      accumulate(out, create(i, vec), coeff);
    }
  }
  return out;
}

}  // namespace monofock
