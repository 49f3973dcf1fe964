#include "exacthnf/modular_kernels.hpp"

#include <cassert>

namespace exacthnf {

Int modMul(const Int& a, const Int& b, const Int& y) {
  if (b < 0 || b >= y) throw std::invalid_argument("modMul: b not in [0, Y)");
  instrument::countMul(a, b);
  return posRem(a * b, y);
}

namespace {

// Accumulation shared by both matVecMod orders. The loop keeps every
// intermediate within bitlen(Y) + max operand bitlength + bitlen(count) bits.
void accumulateColumn(std::vector<Int>& acc, const IntMatrix& a, std::size_t j,
                      const Int& bj, const Int& y
#ifndef NDEBUG
                      , unsigned long boundBits
#endif
) {
  if (bj == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Int& aij = a.at(i, j);
    if (aij == 0) continue;
    instrument::countMul(aij, bj);
    acc[i] += posRem(aij * bj, y);
    if (acc[i] >= y) acc[i] -= y;
#ifndef NDEBUG
    assert(bitlen(acc[i]) <= boundBits);
#endif
  }
}

#ifndef NDEBUG
unsigned long columnBoundBits(const IntMatrix& a, const Int& y) {
  unsigned long maxCol = 1;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      maxCol = std::max(maxCol, bitlen(a.at(i, j)));
  return bitlen(y) + maxCol + bitlen(Int(static_cast<long>(a.cols())));
}
#endif

}  // namespace

std::vector<Int> matVecModByCols(const IntMatrix& a, const std::vector<Int>& b,
                                 const Int& y) {
  if (a.cols() != b.size())
    throw std::invalid_argument("matVecModByCols: dimension mismatch");
  std::vector<Int> acc(a.rows(), Int(0));
#ifndef NDEBUG
  const unsigned long bound = columnBoundBits(a, y);
#endif
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Int bj = posRem(b[j], y);
    accumulateColumn(acc, a, j, bj, y
#ifndef NDEBUG
                     , bound
#endif
    );
  }
  return acc;
}

std::vector<Int> matVecModByRows(const IntMatrix& a, const std::vector<Int>& b,
                                 const Int& y) {
  if (a.cols() != b.size())
    throw std::invalid_argument("matVecModByRows: dimension mismatch");
  std::vector<Int> acc(a.rows(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int sum(0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int& aij = a.at(i, j);
      if (aij == 0 || b[j] == 0) continue;
      instrument::countMul(aij, b[j]);
      sum += posRem(aij * posRem(b[j], y), y);
      if (sum >= y) sum -= y;
    }
    acc[i] = sum;
  }
  return acc;
}

ReducedMassager hermiteTimesMassager(const CompactHermite& h,
                                     const ReducedMassager& m) {
  const SmithForm& s = m.smith();
  const std::size_t n = s.size();
  if (h.dim() != m.dim() || m.dim() != n)
    throw std::invalid_argument("hermiteTimesMassager: dimension mismatch");
  if (h.isIdentity()) return m;

  ReducedMassager out = m;
  for (std::size_t j = s.firstNontrivial(); j < n; ++j) {
    const Int& sj = s.s(j);
    // y := colmod(M_j + (H - I) M_j, s_j)
    std::vector<Int> y = m.column(j);
    for (std::size_t t = 0; t < h.nontrivialCount(); ++t) {
      const std::size_t c = h.nontrivialIndices()[t];
      const Int& xc = m.entry(c, j);
      if (xc == 0) continue;
      const std::vector<Int>& hc = h.storedColumn(t);
      for (std::size_t r = 0; r < c; ++r) {
        if (hc[r] == 0) continue;
        instrument::countMul(hc[r], xc);
        y[r] = posRem(y[r] + posRem(hc[r] * xc, sj), sj);
      }
      Int dm1 = hc[c] - 1;
      instrument::countMul(dm1, xc);
      y[c] = posRem(y[c] + posRem(dm1 * xc, sj), sj);
    }
    for (std::size_t i = 0; i < n; ++i) out.setEntry(i, j, posRem(y[i], sj));
  }
  return out;
}

IntMatrix hermiteTransposeTimes(const CompactHermite& h, const IntMatrix& m,
                                const SmithForm& s) {
  const std::size_t n = h.dim();
  if (m.rows() != n || m.cols() != s.size())
    throw std::invalid_argument("hermiteTransposeTimes: dimension mismatch");
  IntMatrix out(n, m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Int& sj = s.s(j);
    // Row r of H^T is e_r unless column r of H is nontrivial.
    for (std::size_t r = 0; r < n; ++r) out.at(r, j) = posRem(m.at(r, j), sj);
    for (std::size_t t = 0; t < h.nontrivialCount(); ++t) {
      const std::size_t r = h.nontrivialIndices()[t];
      const std::vector<Int>& hr = h.storedColumn(t);
      Int sum(0);
      for (std::size_t c = 0; c < r; ++c) {
        if (hr[c] == 0 || m.at(c, j) == 0) continue;
        instrument::countMul(hr[c], m.at(c, j));
        sum += posRem(hr[c] * m.at(c, j), sj);
        if (sum >= sj) sum -= sj;
      }
      instrument::countMul(hr[r], m.at(r, j));
      sum += posRem(hr[r] * m.at(r, j), sj);
      out.at(r, j) = posRem(sum, sj);
    }
  }
  return out;
}

IntMatrix outerProductColmod(const std::vector<Int>& u, const std::vector<Int>& m,
                             const SmithForm& s) {
  if (m.size() != s.size())
    throw std::invalid_argument("outerProductColmod: dimension mismatch");
  const std::size_t rows = u.size(), n = s.size();
  IntMatrix out(rows, n);
  std::vector<Int> ubar = u;
  // Descending-modulus sweep: re-reduce u as the column modulus drops.
  for (std::size_t jj = n; jj-- > 0;) {
    const Int& sj = s.s(jj);
    if (sj == 1) break;
    if (jj + 1 < n)
      for (Int& v : ubar) v = posRem(v, sj);
    const Int mj = posRem(m[jj], sj);
    if (mj == 0) continue;
    for (std::size_t i = 0; i < rows; ++i) {
      if (ubar[i] == 0) continue;
      instrument::countMul(ubar[i], mj);
      out.at(i, jj) = posRem(ubar[i] * mj, sj);
    }
  }
  return out;
}

std::vector<Int> vecTimesMatrixColmod(const std::vector<Int>& u, const IntMatrix& m,
                                      const SmithForm& s) {
  if (u.size() != m.rows() || m.cols() != s.size())
    throw std::invalid_argument("vecTimesMatrixColmod: dimension mismatch");
  const std::size_t n = s.size();
  std::vector<Int> out(n, Int(0));
  std::vector<Int> ubar = u;
  for (std::size_t jj = n; jj-- > 0;) {
    const Int& sj = s.s(jj);
    if (sj == 1) break;
    if (jj + 1 < n)
      for (Int& v : ubar) v = posRem(v, sj);
    Int sum(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (ubar[i] == 0 || m.at(i, jj) == 0) continue;
      instrument::countMul(ubar[i], m.at(i, jj));
      sum += posRem(ubar[i] * posRem(m.at(i, jj), sj), sj);
      if (sum >= sj) sum -= sj;
    }
    out[jj] = posRem(sum, sj);
  }
  return out;
}

std::vector<Int> productRow(const ReducedMassager& m, const RowReducedMultiplier& u,
                            std::size_t i) {
  const SmithForm& s = m.smith();
  if (s.size() != u.rows())
    throw std::invalid_argument("productRow: Smith forms disagree");
  if (i >= m.dim()) throw std::out_of_range("productRow: row index out of range");
  const Int& sn = s.s();
  std::vector<Int> out(u.cols(), Int(0));
  for (std::size_t k = s.firstNontrivial(); k < s.size(); ++k) {
    const Int f = posRem(m.entry(i, k) * s.sStar(k), sn);
    if (f == 0) continue;
    for (std::size_t j = 0; j < u.cols(); ++j) {
      const Int& ukj = u.entry(k, j);
      if (ukj == 0) continue;
      instrument::countMul(f, ukj);
      out[j] += posRem(f * ukj, sn);
      if (out[j] >= sn) out[j] -= sn;
    }
  }
  return out;
}

std::vector<Int> productColumn(const ReducedMassager& m,
                               const RowReducedMultiplier& u, std::size_t j) {
  const SmithForm& s = m.smith();
  if (s.size() != u.rows())
    throw std::invalid_argument("productColumn: Smith forms disagree");
  if (j >= u.cols()) throw std::out_of_range("productColumn: column index out of range");
  const Int& sn = s.s();
  std::vector<Int> out(m.dim(), Int(0));
  for (std::size_t k = s.firstNontrivial(); k < s.size(); ++k) {
    const Int f = posRem(u.entry(k, j) * s.sStar(k), sn);
    if (f == 0) continue;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      const Int& mik = m.entry(i, k);
      if (mik == 0) continue;
      instrument::countMul(f, mik);
      out[i] += posRem(f * mik, sn);
      if (out[i] >= sn) out[i] -= sn;
    }
  }
  return out;
}

}  // namespace exacthnf
