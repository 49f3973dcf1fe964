#pragma once

#include "exacthnf/compact.hpp"

namespace exacthnf {

/// Diagonal entries h_1..h_n of the Hermite form of A, from a certified
/// (M, S) pair: peels one minimal column denominator per nontrivial invariant
/// factor and accumulates the diagonals. Throws CertifyFail when the diagonal
/// product does not equal det S (invalid massager input).
std::vector<Int> hermiteDiagonals(const ReducedMassager& m);

}  // namespace exacthnf
