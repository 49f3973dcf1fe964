#include "exacthnf/denominators.hpp"

#include <cassert>

namespace exacthnf {

namespace {

Int divExact(const Int& a, const Int& b) {
  Int q;
#ifndef NDEBUG
  Int r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  assert(r == 0);
#else
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
#endif
  return q;
}

Int floorDiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void subScaled(std::vector<Int>& target, const Int& q, const std::vector<Int>& src,
               std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < target.size(); ++j) {
    if (src[j] == 0) continue;
    instrument::countMul(q, src[j]);
    target[j] -= q * src[j];
  }
}

}  // namespace

namespace detail {

IntMatrix hnfModStack(std::vector<std::vector<Int>> rows, std::size_t n, const Int& d) {
  if (d <= 0) throw std::invalid_argument("hnfModStack: modulus must be positive");
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("hnfModStack: bad row length");
  for (auto& r : rows)
    for (Int& v : r) v = posRem(v, d);
  // The d*e_c rows make d*Z^n explicit; while column c is still unprocessed its
  // certificate row is untouched, so entries of later columns may be reduced
  // mod d at any time.
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Int> e(n, Int(0));
    e[c] = d;
    rows.push_back(std::move(e));
  }

  const std::size_t m = rows.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (rows[j][j] == 0) {
      for (std::size_t r = j + 1; r < m; ++r)
        if (rows[r][j] != 0) {
          std::swap(rows[j], rows[r]);
          break;
        }
    }
    for (std::size_t r = j + 1; r < m; ++r) {
      if (rows[r][j] == 0) continue;
      const Int a = rows[j][j], b = rows[r][j];
      if (a != 0 && b % a == 0) {
        subScaled(rows[r], b / a, rows[j], j);
      } else {
        Int p, q;
        const Int g = gcdExt(a, b, p, q);
        const Int ag = divExact(a, g), bg = divExact(b, g);
        std::vector<Int>& rj = rows[j];
        std::vector<Int>& rr = rows[r];
        for (std::size_t c = j; c < n; ++c) {
          instrument::countMul(rj[c], p);
          instrument::countMul(rr[c], q);
          Int nj = p * rj[c] + q * rr[c];
          Int nr = ag * rr[c] - bg * rj[c];
          rj[c] = std::move(nj);
          rr[c] = std::move(nr);
        }
      }
      rows[r][j] = 0;
      for (std::size_t c = j + 1; c < n; ++c) {
        rows[j][c] = posRem(rows[j][c], d);
        rows[r][c] = posRem(rows[r][c], d);
      }
    }
    // Pivot is a gcd involving the certificate row, hence positive and | d.
    assert(rows[j][j] > 0 && d % rows[j][j] == 0);
  }

  // Canonical reduction of the triangular top block.
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Int q = floorDiv(rows[i][j], rows[j][j]);
      subScaled(rows[i], q, rows[j], j);
    }

  IntMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) h.at(i, j) = rows[i][j];
  return h;
}

HnfTransform rowHnfWithTransform(const IntMatrix& b) {
  const std::size_t m = b.rows(), n = b.cols();
  HnfTransform t;
  t.h.resize(m);
  t.u.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    t.h[i] = b.row(i);
    t.u[i].assign(m, Int(0));
    t.u[i][i] = 1;
  }
  std::size_t piv = 0;
  for (std::size_t j = 0; j < n && piv < m; ++j) {
    std::size_t r = piv;
    while (r < m && t.h[r][j] == 0) ++r;
    if (r == m) continue;
    std::swap(t.h[piv], t.h[r]);
    std::swap(t.u[piv], t.u[r]);
    for (std::size_t i = piv + 1; i < m; ++i) {
      if (t.h[i][j] == 0) continue;
      const Int a = t.h[piv][j], c = t.h[i][j];
      if (c % a == 0) {
        const Int q = c / a;
        subScaled(t.h[i], q, t.h[piv], 0);
        subScaled(t.u[i], q, t.u[piv], 0);
        continue;
      }
      Int p, q;
      const Int g = gcdExt(a, c, p, q);
      const Int ag = divExact(a, g), cg = divExact(c, g);
      for (std::size_t k = 0; k < n; ++k) {
        Int np = p * t.h[piv][k] + q * t.h[i][k];
        Int ni = ag * t.h[i][k] - cg * t.h[piv][k];
        t.h[piv][k] = std::move(np);
        t.h[i][k] = std::move(ni);
      }
      for (std::size_t k = 0; k < m; ++k) {
        Int np = p * t.u[piv][k] + q * t.u[i][k];
        Int ni = ag * t.u[i][k] - cg * t.u[piv][k];
        t.u[piv][k] = std::move(np);
        t.u[i][k] = std::move(ni);
      }
    }
    ++piv;
  }
  return t;
}

std::vector<std::size_t> selectIndependentRows(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Int>> basis;  // echelon rows, one per pivot column
  std::vector<std::size_t> pivotCol;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m && chosen.size() < n; ++i) {
    std::vector<Int> v = a.row(i);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      const std::size_t p = pivotCol[t];
      if (v[p] == 0) continue;
      // fraction-free clearing of position p
      const Int vp = v[p], wp = basis[t][p];
      for (std::size_t j = 0; j < n; ++j) {
        instrument::countMul(wp, v[j]);
        v[j] = wp * v[j] - vp * basis[t][j];
      }
    }
    std::size_t lead = 0;
    while (lead < n && v[lead] == 0) ++lead;
    if (lead == n) continue;
    basis.push_back(std::move(v));
    pivotCol.push_back(lead);
    chosen.push_back(i);
  }
  if (chosen.size() < n) throw SingularError("matrix does not have full column rank");
  return chosen;
}

}  // namespace detail

Int detBareiss(const IntMatrix& a) {
  if (!a.isSquare()) throw std::invalid_argument("detBareiss: matrix not square");
  const std::size_t n = a.rows();
  std::vector<std::vector<Int>> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = a.row(i);
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && w[r][k] == 0) ++r;
      if (r == n) return Int(0);
      std::swap(w[k], w[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        instrument::countMul(w[i][j], w[k][k]);
        instrument::countMul(w[i][k], w[k][j]);
        w[i][j] = divExact(w[i][j] * w[k][k] - w[i][k] * w[k][j], prev);
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  return sign > 0 ? w[n - 1][n - 1] : -w[n - 1][n - 1];
}

IntMatrix adjugateScaled(const IntMatrix& a, const Int& d) {
  if (!a.isSquare()) throw std::invalid_argument("adjugateScaled: matrix not square");
  if (d <= 0) throw std::invalid_argument("adjugateScaled: need |det| > 0");
  const std::size_t n = a.rows();
  std::vector<std::vector<Int>> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = a.row(i);
    w[i].resize(2 * n, Int(0));
    w[i][n + i] = d;
  }
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && w[r][k] == 0) ++r;
      if (r == n) throw SingularError("adjugateScaled: singular matrix");
      std::swap(w[k], w[r]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < 2 * n; ++j) {
        instrument::countMul(w[i][j], w[k][k]);
        w[i][j] = divExact(w[i][j] * w[k][k] - w[i][k] * w[k][j], prev);
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  if (w[n - 1][n - 1] == 0) throw SingularError("adjugateScaled: singular matrix");

  IntMatrix adj(n, n);
  std::vector<Int> x(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Int num = w[ii][n + c];
      for (std::size_t j = ii + 1; j < n; ++j) {
        instrument::countMul(w[ii][j], x[j]);
        num -= w[ii][j] * x[j];
      }
      x[ii] = divExact(num, w[ii][ii]);
    }
    for (std::size_t i = 0; i < n; ++i) adj.at(i, c) = x[i];
  }
  return adj;
}

CompactHermite hcol(const std::vector<Int>& w, const Int& d) {
  if (d <= 0) throw std::invalid_argument("hcol: denominator must be positive");
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("hcol: empty vector");
  if (d == 1) return CompactHermite(n);

  std::vector<Int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = posRem(w[i], d);

  // Bottom-up gcd chain: G[k] = gcd(v_k, ..., v_{n-1}, d), with a combination
  // vector expressing G[k] in the v_i (the d coefficient is dropped; rows only
  // need to annihilate v modulo d).
  std::vector<Int> combo(n, Int(0));                 // combination for G[k+1]
  std::vector<std::vector<Int>> rows(n);             // triangular basis rows
  std::vector<Int> diag(n);
  Int gNext = d;
  for (std::size_t k = n; k-- > 0;) {
    Int alpha, beta;
    const Int g = gcdExt(v[k], gNext, alpha, beta);
    const Int h = divExact(gNext, g);
    const Int q = divExact(v[k], g);
    std::vector<Int> row(n, Int(0));
    for (std::size_t j = k + 1; j < n; ++j) {
      if (combo[j] == 0) continue;
      instrument::countMul(q, combo[j]);
      row[j] = posRem(-q * combo[j], d);
    }
    row[k] = h;
    rows[k] = std::move(row);
    diag[k] = h;
    // combo for G[k] = alpha*v_k + beta*G[k+1]
    for (std::size_t j = k + 1; j < n; ++j) {
      if (combo[j] == 0) continue;
      instrument::countMul(beta, combo[j]);
      combo[j] = posRem(beta * combo[j], d);
    }
    combo[k] = posRem(alpha, d);
    gNext = g;
  }

  // Canonical off-diagonal reduction.
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Int q = floorDiv(rows[i][j], diag[j]);
      subScaled(rows[i], q, rows[j], j);
    }

  std::vector<std::size_t> idx;
  std::vector<std::vector<Int>> cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (diag[j] == 1) continue;
    idx.push_back(j);
    std::vector<Int> col(j + 1);
    for (std::size_t i = 0; i <= j; ++i) col[i] = rows[i][j];
    cols.push_back(std::move(col));
  }
  CompactHermite h(n, std::move(idx), std::move(cols));
  assert(d % h.det() == 0);
  return h;
}

CompactHermite minimalDenominatorOracle(const IntMatrix& b, const Int& s) {
  if (s <= 0) throw std::invalid_argument("minimalDenominatorOracle: s must be positive");
  const std::size_t n = b.rows(), m = b.cols();
  IntMatrix stacked(n + m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) stacked.at(i, j) = b.at(i, j);
  for (std::size_t j = 0; j < m; ++j) stacked.at(n + j, j) = -s;

  const detail::HnfTransform t = detail::rowHnfWithTransform(stacked);
  std::vector<std::vector<Int>> kernelRows;
  for (std::size_t r = 0; r < t.h.size(); ++r) {
    bool zero = true;
    for (const Int& v : t.h[r])
      if (v != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    std::vector<Int> proj(t.u[r].begin(), t.u[r].begin() + static_cast<std::ptrdiff_t>(n));
    kernelRows.push_back(std::move(proj));
  }
  assert(kernelRows.size() == n);
  return compress(detail::hnfModStack(std::move(kernelRows), n, s));
}

IntMatrix composeDenominators(const CompactHermite& h2, const CompactHermite& h1) {
  return composeDenominators(h2, h1.expand());
}

IntMatrix composeDenominators(const CompactHermite& h2, const IntMatrix& h1) {
  if (h2.dim() != h1.rows())
    throw std::invalid_argument("composeDenominators: dimension mismatch");
  return matMul(h2.expand(), h1);
}

CompactHermite classicalHnf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n)
    throw std::invalid_argument("classicalHnf: need at least as many rows as columns");
  Int d;
  if (m == n) {
    d = detBareiss(a);
    if (d == 0) throw SingularError("classicalHnf: singular matrix");
  } else {
    const auto sel = detail::selectIndependentRows(a);  // throws if rank < n
    IntMatrix sub(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sub.at(i, j) = a.at(sel[i], j);
    d = detBareiss(sub);
  }
  if (d < 0) d = -d;
  std::vector<std::vector<Int>> rows(m);
  for (std::size_t i = 0; i < m; ++i) rows[i] = a.row(i);
  return compress(detail::hnfModStack(std::move(rows), n, d));
}

}  // namespace exacthnf
