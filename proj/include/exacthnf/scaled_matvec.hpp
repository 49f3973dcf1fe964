#pragma once

#include "exacthnf/compact.hpp"

namespace exacthnf {

/// Radix-X partial linearization of a column-reduced matrix: column i is
/// replaced by the k_i coefficient columns of the X-adic expansions of its
/// entries, where k_i is the least k with X^k >= s_i (0 for s_i = 1).
struct Linearization {
  Int radix;
  std::size_t rows = 0;
  std::vector<std::size_t> blockLen;  // per source column
  std::vector<std::size_t> offset;    // prefix sums, size n+1
  std::vector<Int> digits;            // rows x offset[n], row-major

  std::size_t totalCols() const { return offset.back(); }
  const Int& digit(std::size_t r, std::size_t c) const {
    return digits[r * totalCols() + c];
  }
};

/// Paired moduli for the precision reduction: X the radix (power of two on the
/// production path), Y a power of p exceeding X^2 and coprime to s.
struct DualModuli {
  Int x, y, h, p;
};

/// X = smallest power of two >= 2h*max(1, ceil(log2 det S)); Y = smallest
/// power of p > X^2. Requires h | s, p an odd prime coprime to s.
DualModuli chooseModuli(const Int& h, const SmithForm& s, const Int& p);

/// Any radix X >= 2 is accepted (non-power-of-two radices exist for tests; the
/// production path always passes a power of two).
Linearization linearize(const ReducedMassager& m, const Int& x);

/// X-power residue blocks: block i holds Rem(u_i * X^t, s_i) for t < k_i.
std::vector<std::vector<Int>> uVectors(const std::vector<Int>& u, const SmithForm& s,
                                       const Int& x);

/// Blocks Rem(s_i^{-1} * uBlock_i, Y); throws CertifyFail when some s_i is not
/// invertible mod Y (a bad prime).
std::vector<std::vector<Int>> wVectors(const std::vector<Int>& u, const SmithForm& s,
                                       const Int& x, const Int& y);

/// v in [0,h)^n with (s/h)*v ≡ M*S^**u (mod s), computed at precision governed
/// by h: stream the u/w blocks entry by entry and accumulate h*vecM*w mod Y.
/// Requires M = colmod(M,S), u = rowmod(u,S), h | s, and that (s/h) divides
/// the exact product (the caller's consistency checks catch violations).
std::vector<Int> scaledMatVecProd(const ReducedMassager& m, const std::vector<Int>& u,
                                  const Int& h, const Int& p);

}  // namespace exacthnf
