#include "monofock/basis.hpp"

#include <algorithm>

#include "monofock/errors.hpp"

namespace monofock {

BasisVector::BasisVector(std::vector<int> idx) : indices(std::move(idx)) {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 1) throw Error("basis indices must be >= 1");
    if (k > 0 && indices[k] <= indices[k - 1])
      throw Error("basis indices must be strictly increasing");
  }
}

bool BasisVector::operator<(const BasisVector& o) const {
  if (indices.size() != o.indices.size())
    return indices.size() < o.indices.size();
  return indices < o.indices;
}

BasisVector vacuum() { return BasisVector{}; }

std::optional<BasisVector> annihilate(int i, const BasisVector& v) {
  if (i < 1) throw Error("operator index must be >= 1");
  if (v.is_vacuum() || v.first() != i) return std::nullopt;
  BasisVector out;
  out.indices.assign(v.indices.begin() + 1, v.indices.end());
  return out;
}

std::optional<BasisVector> create(int i, const BasisVector& v) {
  if (i < 1) throw Error("operator index must be >= 1");
  if (!v.is_vacuum() && i >= v.first()) return std::nullopt;
  BasisVector out;
  out.indices.reserve(v.indices.size() + 1);
  out.indices.push_back(i);
  out.indices.insert(out.indices.end(), v.indices.begin(), v.indices.end());
  return out;
}

std::optional<BasisVector> right_annihilate(int i, const BasisVector& v) {
  if (i < 1) throw Error("operator index must be >= 1");
  if (v.is_vacuum() || v.last() != i) return std::nullopt;
  BasisVector out;
  out.indices.assign(v.indices.begin(), v.indices.end() - 1);
  return out;
}

std::optional<BasisVector> right_create(int i, const BasisVector& v) {
  if (i < 1) throw Error("operator index must be >= 1");
  if (!v.is_vacuum() && i <= v.last()) return std::nullopt;
  BasisVector out = v;
  out.indices.push_back(i);
  return out;
}

TruncationSpec::TruncationSpec(int n, int l) : max_index(n), max_level(l) {
  if (n < 1 || l < 1) throw Error("truncation requires N >= 1 and L >= 1");
}

bool TruncationSpec::contains(const BasisVector& v) const {
  if (v.level() > max_level) return false;
  return v.is_vacuum() || v.last() <= max_index;
}

std::int64_t TruncationSpec::dimension() const {
  std::int64_t total = 0;
  std::int64_t binom = 1;  // C(N, 0)
  for (int k = 0; k <= std::min(max_level, max_index); ++k) {
    total += binom;
    binom = binom * (max_index - k) / (k + 1);
  }
  return total;
}

IndexSet::IndexSet(std::vector<int> idx) : indices(std::move(idx)) {
  if (indices.empty()) throw Error("index set must be nonempty");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 1) throw Error("index set entries must be >= 1");
    if (k > 0 && indices[k] <= indices[k - 1])
      throw Error("index set must be strictly increasing");
  }
}

bool IndexSet::contiguous_from_one() const {
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (indices[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Basis::Basis(std::vector<BasisVector> vectors) : vectors_(std::move(vectors)) {
  for (int k = 0; k < static_cast<int>(vectors_.size()); ++k)
    lookup_.emplace(vectors_[k], k);
}

int Basis::index_of(const BasisVector& v) const {
  auto it = lookup_.find(v);
  return it == lookup_.end() ? -1 : it->second;
}

namespace {
void emit_tuples(const std::vector<int>& pool, int length, std::size_t from,
                 std::vector<int>& current, std::vector<BasisVector>& out) {
  if (static_cast<int>(current.size()) == length) {
    out.push_back(BasisVector(current));
    return;
  }
  for (std::size_t p = from; p < pool.size(); ++p) {
    current.push_back(pool[p]);
    emit_tuples(pool, length, p + 1, current, out);
    current.pop_back();
  }
}

Basis enumerate_over_pool(const std::vector<int>& pool, int max_level) {
  std::vector<BasisVector> vectors;
  std::vector<int> current;
  for (int len = 0; len <= max_level; ++len)
    emit_tuples(pool, len, 0, current, vectors);
  return Basis(std::move(vectors));
}
}  // namespace

Basis enumerate_basis(const TruncationSpec& trunc) {
  std::vector<int> pool(trunc.max_index);
  for (int i = 0; i < trunc.max_index; ++i) pool[i] = i + 1;
  return enumerate_over_pool(pool, std::min(trunc.max_level, trunc.max_index));
}

Basis enumerate_subsets(const IndexSet& I) {
  return enumerate_over_pool(I.indices, I.size());
}

}  // namespace monofock
