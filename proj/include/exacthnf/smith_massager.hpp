#pragma once

#include "exacthnf/compact.hpp"

namespace exacthnf {

/// Output of the Smith step: reduced massager M, Smith form S, auxiliary odd
/// prime p with p coprime to det S.
struct MassagerBundle {
  ReducedMassager m;
  SmithForm s;
  Int p;
};

/// Deterministic reference Smith form + reduced massager. Works over Z/(d)
/// with d = |det A|; the column transform is tracked modulo d, which is enough
/// to recover colmod(V, S) exactly.
MassagerBundle smithMassager(const IntMatrix& a);
MassagerBundle smithMassager(const IntMatrix& a, const Int& absDet);

/// Smallest odd prime >= max(3, n * bitlen(normBound)) not dividing det S.
Int pickPrime(const SmithForm& s, std::size_t n, const Int& normBound);

/// Next larger admissible prime (used when a Las Vegas attempt fails).
Int nextAdmissiblePrime(const Int& p, const SmithForm& s);

/// Checks A*M ≡ 0 colmod S, det S = |det A|, and (for small dimensions) that
/// the minimal denominator of M/S has determinant |det A|.
bool certifyMassager(const IntMatrix& a, const MassagerBundle& bundle);

Int maxAbsEntry(const IntMatrix& a);

}  // namespace exacthnf
