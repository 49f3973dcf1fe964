#pragma once

#include <string>

#include "exacthnf/compact.hpp"

namespace exacthnf {

/// Data of one Howell sweep step: a combination c with sum(c_k a_k) ≡ 1
/// (mod h) whose last entry is coprime to s.
struct HowellStep {
  std::size_t iteration;
  Int h;
  std::vector<Int> a;
  std::vector<Int> c;
};

/// Invariant check used by tests and debug paths.
bool checkHowellStep(const HowellStep& step, const Int& s);

/// True iff the upper-triangular T satisfies the Howell property over Z/(s).
/// Diagonal entries must be divisors of s once zeros are read as s.
bool verifyHowell(const IntMatrix& t, const Int& s, std::string* reason = nullptr);

/// c with c_1 a_1 + ... + c_n a_n ≡ 1 (mod h) and the last entry, as lifted,
/// coprime to s. Requires gcd(a_1,...,a_n, h) = 1; otherwise CertifyFail.
std::vector<Int> solveUnitCombination(const std::vector<Int>& a, const Int& h,
                                      const Int& s);

/// Row-reduced multiplier U with Rem(M*S^**U, s) in Howell form; the Howell
/// form itself is never materialized. diag holds the Hermite diagonal entries.
RowReducedMultiplier specialHowellTransform(const ReducedMassager& m,
                                            const std::vector<Int>& diag,
                                            const Int& p);

}  // namespace exacthnf
