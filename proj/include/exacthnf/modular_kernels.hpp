#pragma once

#include <vector>

#include "exacthnf/compact.hpp"

namespace exacthnf {

/// Rem(a*b, Y) for b in [0, Y). Operand sizes stay near bitlen(a) + bitlen(Y).
Int modMul(const Int& a, const Int& b, const Int& y);

/// Rem(A*b, Y) entrywise, accumulated column by column with a reduction after
/// every column product so intermediates stay small.
std::vector<Int> matVecModByCols(const IntMatrix& a, const std::vector<Int>& b,
                                 const Int& y);

/// Same contract, accumulation ordered row by row (for row-bounded operands).
std::vector<Int> matVecModByRows(const IntMatrix& a, const std::vector<Int>& b,
                                 const Int& y);

/// colmod(H*M, S), computed as colmod(M + (H - I)*M, S) so only the nontrivial
/// columns of H do any work.
ReducedMassager hermiteTimesMassager(const CompactHermite& h,
                                     const ReducedMassager& m);

/// colmod(H^T * M, S) for a column-reduced M.
IntMatrix hermiteTransposeTimes(const CompactHermite& h, const IntMatrix& m,
                                const SmithForm& s);

/// colmod(u * m, S) for a column vector u over Z/(s) and a column-reduced row
/// vector m, via the descending-modulus loop (u is re-reduced as the column
/// modulus drops).
IntMatrix outerProductColmod(const std::vector<Int>& u, const std::vector<Int>& m,
                             const SmithForm& s);

/// colmod(u * M, S) for a row vector u over Z/(s): entry j is Rem(u * col_j, s_j).
std::vector<Int> vecTimesMatrixColmod(const std::vector<Int>& u, const IntMatrix& m,
                                      const SmithForm& s);

/// Row i of Rem(M * S^* * U, s) without forming the product.
std::vector<Int> productRow(const ReducedMassager& m, const RowReducedMultiplier& u,
                            std::size_t i);

/// Column j of Rem(M * S^* * U, s) without forming the product.
std::vector<Int> productColumn(const ReducedMassager& m,
                               const RowReducedMultiplier& u, std::size_t j);

}  // namespace exacthnf
