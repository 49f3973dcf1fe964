#include "exacthnf/smith_massager.hpp"

#include <cassert>

#include "exacthnf/denominators.hpp"

namespace exacthnf {

Int maxAbsEntry(const IntMatrix& a) {
  Int m(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int v = abs(a.at(i, j));
      if (v > m) m = v;
    }
  return m;
}

Int pickPrime(const SmithForm& s, std::size_t n, const Int& normBound) {
  const Int detS = s.det();
  Int start = Int(static_cast<unsigned long>(n)) * bitlen(normBound);
  if (start < 3) start = 3;
  Int p = start - 1;
  do {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  } while (detS % p == 0);
  return p;
}

Int nextAdmissiblePrime(const Int& p, const SmithForm& s) {
  const Int detS = s.det();
  Int q = p;
  do {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
  } while (detS % q == 0);
  return q;
}

namespace {

using Mat = std::vector<std::vector<Int>>;

// Working state for the per-pivot elimination over Z/(d). Rows 0..k-1 and
// columns 0..k-1 of b are already in final diagonal shape at stage k, so row
// ops touch columns >= k only; column ops touch b rows >= k but every row of
// the tracked transform v.
struct SmithState {
  Mat b, v;
  Int d;
  std::size_t n;

  void combineRows(std::size_t k, std::size_t r) {
    const Int a = b[k][k], bb = b[r][k];
    if (a != 0 && bb % a == 0) {
      const Int q = bb / a;
      for (std::size_t c = k; c < n; ++c) {
        if (b[k][c] == 0) continue;
        instrument::countMul(q, b[k][c]);
        b[r][c] = posRem(b[r][c] - q * b[k][c], d);
      }
      return;
    }
    Int p, q;
    const Int g = gcdExt(a, bb, p, q);
    const Int ag = a / g, bg = bb / g;
    for (std::size_t c = k; c < n; ++c) {
      instrument::countMul(b[k][c], p);
      instrument::countMul(b[r][c], q);
      Int nk = posRem(p * b[k][c] + q * b[r][c], d);
      Int nr = posRem(ag * b[r][c] - bg * b[k][c], d);
      b[k][c] = std::move(nk);
      b[r][c] = std::move(nr);
    }
  }

  void combineColumns(std::size_t k, std::size_t c) {
    const Int a = b[k][k], bb = b[k][c];
    if (a != 0 && bb % a == 0) {
      const Int q = bb / a;
      for (std::size_t r = k; r < n; ++r) {
        if (b[r][k] == 0) continue;
        instrument::countMul(q, b[r][k]);
        b[r][c] = posRem(b[r][c] - q * b[r][k], d);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (v[r][k] == 0) continue;
        instrument::countMul(q, v[r][k]);
        v[r][c] = posRem(v[r][c] - q * v[r][k], d);
      }
      return;
    }
    Int p, q;
    const Int g = gcdExt(a, bb, p, q);
    const Int ag = a / g, bg = bb / g;
    for (std::size_t r = k; r < n; ++r) {
      instrument::countMul(b[r][k], p);
      instrument::countMul(b[r][c], q);
      Int nk = posRem(p * b[r][k] + q * b[r][c], d);
      Int nc = posRem(ag * b[r][c] - bg * b[r][k], d);
      b[r][k] = std::move(nk);
      b[r][c] = std::move(nc);
    }
    for (std::size_t r = 0; r < n; ++r) {
      instrument::countMul(v[r][k], p);
      instrument::countMul(v[r][c], q);
      Int nk = posRem(p * v[r][k] + q * v[r][c], d);
      Int nc = posRem(ag * v[r][c] - bg * v[r][k], d);
      v[r][k] = std::move(nk);
      v[r][c] = std::move(nc);
    }
  }

  bool columnClear(std::size_t k) const {
    for (std::size_t r = k + 1; r < n; ++r)
      if (b[r][k] != 0) return false;
    return true;
  }

  bool rowClear(std::size_t k) const {
    for (std::size_t c = k + 1; c < n; ++c)
      if (b[k][c] != 0) return false;
    return true;
  }
};

}  // namespace

MassagerBundle smithMassager(const IntMatrix& a) {
  if (!a.isSquare()) throw std::invalid_argument("smithMassager: matrix must be square");
  Int d = detBareiss(a);
  if (d == 0) throw SingularError("smithMassager: singular matrix");
  if (d < 0) d = -d;
  return smithMassager(a, d);
}

MassagerBundle smithMassager(const IntMatrix& a, const Int& absDet) {
  if (!a.isSquare()) throw std::invalid_argument("smithMassager: matrix must be square");
  if (absDet <= 0) throw SingularError("smithMassager: singular matrix");
  const std::size_t n = a.rows();
  const Int normBound = maxAbsEntry(a);
  const Int& d = absDet;

  if (d == 1) {
    SmithForm s(std::vector<Int>(n, Int(1)));
    Int p = pickPrime(s, n, normBound);
    return MassagerBundle{ReducedMassager::zero(s), s, p};
  }

  SmithState st{Mat(n), Mat(n), d, n};
  for (std::size_t i = 0; i < n; ++i) {
    st.b[i] = a.row(i);
    for (Int& x : st.b[i]) x = posRem(x, d);
    st.v[i].assign(n, Int(0));
    st.v[i][i] = 1;
  }

  std::vector<Int> factors(n);
  for (std::size_t k = 0; k < n; ++k) {
    bool exhausted = false;
    for (;;) {
      std::size_t pr = n, pc = n;
      for (std::size_t i = k; i < n && pr == n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (st.b[i][j] != 0) {
            pr = i;
            pc = j;
            break;
          }
      if (pr == n) {
        // trailing block vanishes over Z/(d): remaining factors are d
        for (std::size_t t = k; t < n; ++t) factors[t] = d;
        exhausted = true;
        break;
      }
      if (pr != k) std::swap(st.b[k], st.b[pr]);
      if (pc != k) {
        for (std::size_t r = k; r < n; ++r) std::swap(st.b[r][k], st.b[r][pc]);
        for (std::size_t r = 0; r < n; ++r) std::swap(st.v[r][k], st.v[r][pc]);
      }

      // clear row k and column k; either op can re-dirty the other
      for (;;) {
        for (std::size_t r = k + 1; r < n; ++r)
          if (st.b[r][k] != 0) st.combineRows(k, r);
        bool touched = false;
        for (std::size_t c = k + 1; c < n; ++c)
          if (st.b[k][c] != 0) {
            st.combineColumns(k, c);
            touched = true;
          }
        if (!touched || st.columnClear(k)) break;
      }

      const Int g = gcdInt(st.b[k][k], d);
      // the invariant factor must divide the whole trailing block
      std::size_t bc = n;
      for (std::size_t i = k + 1; i < n && bc == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (st.b[i][j] % g != 0) {
            bc = j;
            break;
          }
      if (bc != n) {
        for (std::size_t r = k; r < n; ++r)
          st.b[r][k] = posRem(st.b[r][k] + st.b[r][bc], d);
        for (std::size_t r = 0; r < n; ++r)
          st.v[r][k] = posRem(st.v[r][k] + st.v[r][bc], d);
        continue;
      }
      // unit row scaling normalizes the pivot to gcd(pivot, d)
      st.b[k][k] = g;
      factors[k] = g;
      break;
    }
    if (exhausted) break;
  }

  SmithForm s(std::move(factors));
  if (s.det() != d)
    throw CertifyFail("smithMassager: invariant factor product mismatch");

  IntMatrix vm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vm.at(i, j) = st.v[i][j];
  ReducedMassager m = ReducedMassager::fromMatrixReduced(vm, s);

  Int p = pickPrime(s, n, normBound);
  return MassagerBundle{std::move(m), std::move(s), std::move(p)};
}

bool certifyMassager(const IntMatrix& a, const MassagerBundle& bundle) {
  if (!a.isSquare()) return false;
  const std::size_t n = a.rows();
  const SmithForm& s = bundle.s;
  if (s.size() != n || bundle.m.dim() != n) return false;
  if (!(bundle.m.smith() == s)) return false;

  // (i) A*M ≡ 0 colmod S, exactly
  const IntMatrix am = matMul(a, bundle.m.toMatrix());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (posRem(am.at(i, j), s.s(j)) != 0) return false;

  Int dAbs = detBareiss(a);
  if (dAbs < 0) dAbs = -dAbs;
  if (dAbs == 0 || s.det() != dAbs) return false;

  if (!(bundle.p >= 3 && mpz_odd_p(bundle.p.get_mpz_t()) && coprime(bundle.p, s.det())))
    return false;

  // (ii) certified via the minimal-denominator determinant at small scale;
  // larger inputs rely on the driver's final Hermite certification.
  constexpr std::size_t kOracleLimit = 12;
  if (n <= kOracleLimit) {
    IntMatrix msStar(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        msStar.at(i, j) = bundle.m.entry(i, j) * s.sStar(j);
    const CompactHermite den = minimalDenominatorOracle(msStar, s.s());
    if (den.det() != dAbs) return false;
  }
  return true;
}

}  // namespace exacthnf
