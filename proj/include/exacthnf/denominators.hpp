#pragma once

#include <vector>

#include "exacthnf/compact.hpp"

namespace exacthnf {

/// Minimal Hermite denominator of w/d for w in [0,d)^n. det of the result
/// divides d; the result annihilates w modulo d from the left.
CompactHermite hcol(const std::vector<Int>& w, const Int& d);

/// Brute-force minimal Hermite denominator of B/s: builds an integer basis of
/// { v : v*B ≡ 0 (mod s) } by left-kernel elimination on [B; -s*I] and
/// Hermite-reduces it. Intended for small test dimensions.
CompactHermite minimalDenominatorOracle(const IntMatrix& b, const Int& s);

/// The product H2*H1 (upper triangular, not necessarily Hermite-reduced).
IntMatrix composeDenominators(const CompactHermite& h2, const CompactHermite& h1);
IntMatrix composeDenominators(const CompactHermite& h2, const IntMatrix& h1);

/// Reference Hermite normal form oracle. Accepts a nonsingular square matrix
/// or a full-column-rank m x n matrix (m >= n); returns the n x n leading
/// block of the row-lattice HNF. Intermediate entries are kept reduced modulo
/// a determinant multiple.
CompactHermite classicalHnf(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int detBareiss(const IntMatrix& a);

/// d * A^{-1} for nonsingular A, where d = detBareiss(A) up to sign; exact.
/// Pass d = |detBareiss(a)|.
IntMatrix adjugateScaled(const IntMatrix& a, const Int& d);

namespace detail {

/// Canonical HNF of the lattice spanned by `rows` plus d*Z^n. Every generator
/// row must have n entries; the lattice must contain d*Z^n (the helper appends
/// those rows itself). All stored entries stay in [0, d).
IntMatrix hnfModStack(std::vector<std::vector<Int>> rows, std::size_t n, const Int& d);

/// Plain exact row HNF with transform: returns {H, U} with H = U*B, U
/// unimodular, H in row echelon (not canonically reduced). Small scale only.
struct HnfTransform {
  std::vector<std::vector<Int>> h;
  std::vector<std::vector<Int>> u;
};
HnfTransform rowHnfWithTransform(const IntMatrix& b);

/// Indices of rows forming a nonsingular n x n submatrix (greedy, in input
/// order); throws SingularError if the matrix has column rank < n.
std::vector<std::size_t> selectIndependentRows(const IntMatrix& a);

}  // namespace detail

}  // namespace exacthnf
