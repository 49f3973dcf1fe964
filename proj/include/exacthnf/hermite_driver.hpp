#pragma once

#include "exacthnf/compact.hpp"
#include "exacthnf/smith_massager.hpp"

namespace exacthnf {

/// Single-column Hermite factor H_j from the unnegated scaled column v (the
/// ScaledMatVecProd output): entry j must be ≡ 1 and entries below j must be 0
/// mod h_j, else CertifyFail. Off-diagonals are posRem(-v_i, h_j).
CompactHermite recoverColumn(const std::vector<Int>& v, const Int& hj, std::size_t j);

/// Hermite form assembled column by column from (M, S, U, diagonals); the
/// first j columns of the running product are final, so H accumulates
/// directly in compact form.
CompactHermite hermiteViaHowell(const ReducedMassager& m, const RowReducedMultiplier& u,
                                const std::vector<Int>& diag, const Int& p);

/// Certified Hermite normal form of a nonsingular matrix. Throws SingularError
/// on singular input and CertifyFail if certification fails twice (once with a
/// fresh prime).
CompactHermite hermiteForm(const IntMatrix& a, bool verify = true);

/// True iff H is the Hermite form of A: valid shape, det H = |det A|, and
/// H*A^{-1} integral (checked exactly through the scaled adjugate). The
/// second form reuses a precomputed |det A|.
bool verifyHermite(const IntMatrix& a, const CompactHermite& h);
bool verifyHermite(const IntMatrix& a, const CompactHermite& h, const Int& absDet);

/// Leading n x n block of the Hermite form of a full-column-rank m x n matrix
/// (m >= n), via the stacked 2n x 2n block scheme.
CompactHermite rectangularHnf(const IntMatrix& a);

}  // namespace exacthnf
