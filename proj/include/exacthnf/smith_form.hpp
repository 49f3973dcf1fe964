#pragma once

#include <vector>

#include "exacthnf/int_matrix.hpp"
#include "exacthnf/integer.hpp"

namespace exacthnf {

/// Invariant factors s_1 | s_2 | ... | s_n, all positive.
class SmithForm {
 public:
  explicit SmithForm(std::vector<Int> invariants);

  std::size_t size() const { return inv_.size(); }
  const Int& s(std::size_t i) const { return inv_[i]; }
  const Int& s() const { return inv_.back(); }
  /// s / s_i, the complementary diagonal entry.
  Int sStar(std::size_t i) const { return inv_.back() / inv_[i]; }
  Int det() const;
  /// Smallest index k with s_k > 1; size() if all trivial.
  std::size_t firstNontrivial() const { return firstNontrivial_; }

  bool operator==(const SmithForm& o) const { return inv_ == o.inv_; }

  const std::vector<Int>& invariants() const { return inv_; }

 private:
  std::vector<Int> inv_;
  std::size_t firstNontrivial_;
};

/// Reduce column j of B modulo s_j. Requires B.cols() == S.size().
IntMatrix colmod(const IntMatrix& b, const SmithForm& s);

/// Reduce row i of B modulo s_i. Requires B.rows() == S.size().
IntMatrix rowmod(const IntMatrix& b, const SmithForm& s);

}  // namespace exacthnf
