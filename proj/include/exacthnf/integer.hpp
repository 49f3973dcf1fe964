#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace exacthnf {

using Int = mpz_class;

/// Las Vegas failure: a certification step rejected an intermediate result.
struct CertifyFail : std::runtime_error {
  explicit CertifyFail(const std::string& what) : std::runtime_error(what) {}
};

/// Input matrix is singular (or rank-deficient where full rank is required).
struct SingularError : std::runtime_error {
  explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

namespace instrument {

extern thread_local std::uint64_t limbOpsCounter;

inline void countMul(const Int& a, const Int& b) {
  const std::uint64_t la = std::max<std::size_t>(1, mpz_size(a.get_mpz_t()));
  const std::uint64_t lb = std::max<std::size_t>(1, mpz_size(b.get_mpz_t()));
  limbOpsCounter += la * lb;
}

inline std::uint64_t limbOps() { return limbOpsCounter; }
inline void reset() { limbOpsCounter = 0; }

}  // namespace instrument

/// Positive remainder: result in [0, m), congruent to a mod m.
inline Int posRem(const Int& a, const Int& m) {
  if (m <= 0) throw std::invalid_argument("posRem: modulus must be positive");
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Bits in the binary representation: 1 for a = 0, else 1 + floor(log2 |a|).
inline unsigned long bitlen(const Int& a) {
  return static_cast<unsigned long>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

/// g = gcd(a,b) >= 0 with g = x*a + y*b.
inline Int gcdExt(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline Int gcdInt(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool coprime(const Int& a, const Int& b) { return gcdInt(a, b) == 1; }

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline Int invertMod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::invalid_argument("invertMod: operand not invertible");
  return r;
}

/// Smallest e >= 0 with 2^e >= v (v >= 1).
inline unsigned long ceilLog2(const Int& v) {
  if (v <= 0) throw std::invalid_argument("ceilLog2: argument must be positive");
  if (v == 1) return 0;
  Int w = v - 1;
  return static_cast<unsigned long>(mpz_sizeinbase(w.get_mpz_t(), 2));
}

/// Smallest x + t*step (t >= 0) coprime to m. Requires gcd(x, step, m) = 1.
inline Int liftCoprime(const Int& x, const Int& step, const Int& m) {
  Int v = x;
  while (!coprime(v, m)) v += step;
  return v;
}

inline bool isOddPrime(const Int& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

}  // namespace exacthnf
