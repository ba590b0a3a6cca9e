#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace monofock {

/// A canonical basis vector of the monotone Fock space: a strictly
/// increasing tuple of positive integer indices. The empty tuple is the
/// vacuum.
struct BasisVector {
  std::vector<int> indices;

  BasisVector() = default;
  explicit BasisVector(std::vector<int> idx);

  bool is_vacuum() const { return indices.empty(); }
  int level() const { return static_cast<int>(indices.size()); }
  int first() const { return indices.front(); }
  int last() const { return indices.back(); }

  bool operator==(const BasisVector& o) const { return indices == o.indices; }
  /// Graded-lexicographic order: shorter tuples first, then lexicographic.
  bool operator<(const BasisVector& o) const;
};

BasisVector vacuum();

/// a_i: removes the leading index when it equals i; zero otherwise.
std::optional<BasisVector> annihilate(int i, const BasisVector& v);

/// a†_i: prepends i when i is below the leading index (or v is the vacuum);
/// zero otherwise.
std::optional<BasisVector> create(int i, const BasisVector& v);

/// b_i: removes the trailing index when it equals i; zero otherwise.
std::optional<BasisVector> right_annihilate(int i, const BasisVector& v);

/// b†_i: appends i when i is above the trailing index (or v is the vacuum);
/// zero otherwise.
std::optional<BasisVector> right_create(int i, const BasisVector& v);

/// Finite truncation of the Fock space: all tuples over {1..max_index}
/// of length at most max_level.
struct TruncationSpec {
  int max_index;
  int max_level;

  TruncationSpec(int n, int l);
  bool contains(const BasisVector& v) const;
  /// sum_{k=0}^{L} C(N, k)
  std::int64_t dimension() const;
};

/// A strictly increasing, nonempty set of positive indices.
struct IndexSet {
  std::vector<int> indices;

  explicit IndexSet(std::vector<int> idx);
  int size() const { return static_cast<int>(indices.size()); }
  int max() const { return indices.back(); }
  bool contiguous_from_one() const;
};

/// An enumerated, ordered truncated basis with reverse lookup.
class Basis {
 public:
  explicit Basis(std::vector<BasisVector> vectors);

  int dim() const { return static_cast<int>(vectors_.size()); }
  const BasisVector& at(int k) const { return vectors_[k]; }
  const std::vector<BasisVector>& vectors() const { return vectors_; }
  /// Index of v, or -1 when v is not in the basis.
  int index_of(const BasisVector& v) const;

 private:
  std::vector<BasisVector> vectors_;
  std::map<BasisVector, int> lookup_;
};

/// All tuples over {1..N} of length <= L in graded-lexicographic order,
/// vacuum first.
Basis enumerate_basis(const TruncationSpec& trunc);

/// All tuples with entries drawn from I (2^|I| of them), graded-lex,
/// vacuum first. This spans the S_I-invariant subspace containing the
/// vacuum.
Basis enumerate_subsets(const IndexSet& I);

}  // namespace monofock
