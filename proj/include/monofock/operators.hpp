#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "monofock/basis.hpp"
#include "monofock/exact_linalg.hpp"

namespace monofock {

/// A linear operator over a truncated basis, stored column-sparse with
/// exact integer entries. `dropped[j]` records that a creation out of
/// basis vector j left the truncation, so identities involving column j
/// are boundary artifacts rather than honest equalities.
class SparseOperator {
 public:
  SparseOperator(std::shared_ptr<const Basis> basis);

  int dim() const { return static_cast<int>(columns_.size()); }
  const Basis& basis() const { return *basis_; }
  std::shared_ptr<const Basis> basis_ptr() const { return basis_; }

  const std::vector<std::pair<int, std::int64_t>>& column(int j) const {
    return columns_[j];
  }
  bool column_dropped(int j) const { return dropped_[j] != 0; }

  void add_entry(int row, int col, std::int64_t value);
  void mark_dropped(int col) { dropped_[col] = 1; }

  std::int64_t entry(int row, int col) const;
  bool is_symmetric() const;
  /// Column norm property of the four elementary operators: at most one
  /// nonzero entry per column, equal to 1.
  bool columns_are_partial_permutation() const;

  SparseOperator sum_with(const SparseOperator& o) const;
  IntMatrix to_dense() const;

 private:
  std::shared_ptr<const Basis> basis_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns_;
  std::vector<char> dropped_;
};

enum class ElementaryKind { Annihilator, Creator, RightAnnihilator, RightCreator };

/// Matrix of one elementary operator over the truncated basis. Creations
/// whose target leaves the truncation are dropped and the source column
/// flagged.
SparseOperator build_elementary(ElementaryKind kind, int i,
                                const TruncationSpec& trunc,
                                std::shared_ptr<const Basis> basis = nullptr);

/// s_i = a_i + a†_i over the truncated basis.
SparseOperator build_position(int i, const TruncationSpec& trunc,
                              std::shared_ptr<const Basis> basis = nullptr);

/// r_i = b_i + b†_i over the truncated basis.
SparseOperator build_right_position(int i, const TruncationSpec& trunc,
                                    std::shared_ptr<const Basis> basis = nullptr);

/// S_I = sum of s_i over i in I.
SparseOperator build_sum(const IndexSet& I, const TruncationSpec& trunc,
                         std::shared_ptr<const Basis> basis = nullptr);

/// Restriction of S_I to the 2^|I|-dimensional subspace of tuples over I,
/// graded-lex, vacuum first. Exact integers; no truncation artifacts.
IntMatrix invariant_subspace_matrix(const IndexSet& I, int cap = 20);

/// Applies the word ops[k-1] * ... * ops[0] to basis column j, tracking
/// whether every intermediate image stayed strictly inside the truncation
/// (one-step containment per applied factor). Returns nullopt when unsafe.
std::optional<std::map<int, std::int64_t>> safe_apply_word(
    const std::vector<const SparseOperator*>& ops, int j);

/// Same product in plain matrix semantics (dropped creations act as zero
/// columns; no safety tracking).
std::map<int, std::int64_t> apply_word_matrix(
    const std::vector<const SparseOperator*>& ops, int j);

/// Max |entry| of [A,B] over columns that are safe for both factor orders;
/// nullopt when no safe column exists.
std::optional<std::int64_t> commutator_on_safe_vectors(const SparseOperator& a,
                                                       const SparseOperator& b);

/// Exact operator action without any truncation: coefficients of basis
/// vectors, applied lazily. Used to check operator identities on the full
/// Fock space where the reachable set of vectors is finite.
using ExactVector = std::map<BasisVector, BigRational>;

ExactVector apply_position_exact(int i, const ExactVector& v);
ExactVector apply_sum_exact(const IndexSet& I, const ExactVector& v);

}  // namespace monofock
