#pragma once

#include <vector>

#include "exacthnf/smith_form.hpp"

namespace exacthnf {

/// Hermite form stored as its nontrivial columns (diagonal > 1) plus their
/// indices. Unlisted columns are identity columns.
class CompactHermite {
 public:
  /// Identity of dimension n.
  explicit CompactHermite(std::size_t dim);

  /// Build from nontrivial columns. indices must be strictly increasing and
  /// columns[t] must hold the indices[t]+1 entries h_{0j}..h_{jj}.
  CompactHermite(std::size_t dim, std::vector<std::size_t> indices,
                 std::vector<std::vector<Int>> columns);

  /// Identity except for one column. colEntries holds h_{0j}..h_{jj}.
  static CompactHermite singleColumn(std::size_t dim, std::size_t j,
                                     std::vector<Int> colEntries);

  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& nontrivialIndices() const { return idx_; }
  std::size_t nontrivialCount() const { return idx_.size(); }
  const std::vector<Int>& storedColumn(std::size_t t) const { return cols_[t]; }

  /// Diagonal entry of column j (1 if trivial).
  Int diag(std::size_t j) const;
  /// Entry (i, j) of the expanded matrix.
  Int entry(std::size_t i, std::size_t j) const;
  Int det() const;
  bool isIdentity() const { return idx_.empty(); }

  IntMatrix expand() const;

  bool operator==(const CompactHermite& o) const = default;

 private:
  std::size_t dim_;
  std::vector<std::size_t> idx_;
  std::vector<std::vector<Int>> cols_;
  void validate() const;
};

/// Validating inverse of expand(); rejects non-Hermite input naming the first
/// violated invariant.
CompactHermite compress(const IntMatrix& h);

/// Matrix M = colmod(M, S): column j lives in [0, s_j). Columns with s_j = 1
/// are identically zero and unstored (they form a prefix, since s_j divide
/// each other in order).
class ReducedMassager {
 public:
  static ReducedMassager zero(SmithForm s);
  /// Validates that column j of m is entrywise in [0, s_j).
  static ReducedMassager fromMatrix(const IntMatrix& m, SmithForm s);
  /// Accepts any integer matrix and reduces columns first.
  static ReducedMassager fromMatrixReduced(const IntMatrix& m, SmithForm s);

  const SmithForm& smith() const { return smith_; }
  std::size_t dim() const { return dim_; }

  const Int& entry(std::size_t i, std::size_t j) const;
  void setEntry(std::size_t i, std::size_t j, Int v);
  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;

  IntMatrix toMatrix() const;
  bool isZero() const;

 private:
  ReducedMassager(SmithForm s, std::size_t dim);
  SmithForm smith_;
  std::size_t dim_;      // row count
  std::size_t first_;    // first stored (nontrivial) column
  std::vector<Int> data_;  // dim x (size - first), row-major
  static const Int kZero;
};

/// Matrix U = rowmod(U, S): row i lives in [0, s_i). Rows with s_i = 1 are zero
/// and unstored. The column count may exceed S.size() (the Howell sweep works
/// on an n x 2n block).
class RowReducedMultiplier {
 public:
  static RowReducedMultiplier zero(SmithForm s, std::size_t cols);
  /// rowmod(I_n) padded on the left to `cols` columns: entry (i, cols-n+i) = 1.
  static RowReducedMultiplier augmentedIdentity(SmithForm s, std::size_t cols);
  static RowReducedMultiplier fromMatrix(const IntMatrix& m, SmithForm s);

  const SmithForm& smith() const { return smith_; }
  std::size_t rows() const { return smith_.size(); }
  std::size_t cols() const { return cols_; }

  const Int& entry(std::size_t i, std::size_t j) const;
  void setEntry(std::size_t i, std::size_t j, Int v);
  std::vector<Int> column(std::size_t j) const;

  /// Keep only the trailing n columns (after the Howell sweep).
  RowReducedMultiplier trailingColumns(std::size_t n) const;

  IntMatrix toMatrix() const;

 private:
  RowReducedMultiplier(SmithForm s, std::size_t cols);
  SmithForm smith_;
  std::size_t cols_;
  std::size_t first_;      // first stored (nontrivial) row
  std::vector<Int> data_;  // (size - first) x cols, row-major
  static const Int kZero;
};

}  // namespace exacthnf
