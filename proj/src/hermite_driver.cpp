#include "exacthnf/hermite_driver.hpp"

#include "exacthnf/denominators.hpp"
#include "exacthnf/hermite_diagonals.hpp"
#include "exacthnf/howell_transform.hpp"
#include "exacthnf/modular_kernels.hpp"
#include "exacthnf/scaled_matvec.hpp"

namespace exacthnf {

CompactHermite recoverColumn(const std::vector<Int>& v, const Int& hj, std::size_t j) {
  const std::size_t n = v.size();
  if (j >= n) throw std::invalid_argument("recoverColumn: index out of range");
  if (hj < 1) throw std::invalid_argument("recoverColumn: diagonal must be positive");
  if (hj == 1) return CompactHermite(n);
  if (posRem(v[j], hj) != 1)
    throw CertifyFail("FAIL: recovered column has no unit pivot");
  for (std::size_t i = j + 1; i < n; ++i)
    if (posRem(v[i], hj) != 0)
      throw CertifyFail("FAIL: recovered column not supported above the pivot");
  std::vector<Int> col(j + 1);
  for (std::size_t i = 0; i < j; ++i) col[i] = posRem(-v[i], hj);
  col[j] = hj;
  return CompactHermite::singleColumn(n, j, std::move(col));
}

CompactHermite hermiteViaHowell(const ReducedMassager& m0, const RowReducedMultiplier& u,
                                const std::vector<Int>& diag, const Int& p) {
  const SmithForm& s = m0.smith();
  const std::size_t n = s.size();
  if (u.rows() != n || u.cols() != n)
    throw std::invalid_argument("hermiteViaHowell: multiplier shape mismatch");
  if (diag.size() != n)
    throw std::invalid_argument("hermiteViaHowell: diagonal count mismatch");

  ReducedMassager m = m0;
  std::vector<std::size_t> idx;
  std::vector<std::vector<Int>> cols;
  for (std::size_t j = 0; j < n; ++j) {
    const Int& hj = diag[j];
    if (hj == 1) continue;
    const std::vector<Int> v = scaledMatVecProd(m, u.column(j), hj, p);
    const CompactHermite hfac = recoverColumn(v, hj, j);
    idx.push_back(j);
    cols.push_back(hfac.storedColumn(0));
    if (j + 1 < n) m = hermiteTimesMassager(hfac, m);
  }
  return CompactHermite(n, std::move(idx), std::move(cols));
}

bool verifyHermite(const IntMatrix& a, const CompactHermite& h) {
  if (!a.isSquare()) return false;
  Int d = detBareiss(a);
  if (d == 0) return false;
  if (d < 0) d = -d;
  return verifyHermite(a, h, d);
}

bool verifyHermite(const IntMatrix& a, const CompactHermite& h, const Int& absDet) {
  if (!a.isSquare() || a.rows() != h.dim()) return false;
  if (absDet <= 0 || h.det() != absDet) return false;
  // H*A^{-1} integral <=> d divides every entry of H * (d*A^{-1})
  const IntMatrix adj = adjugateScaled(a, absDet);
  const IntMatrix prod = matMul(h.expand(), adj);
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (prod.at(i, j) % absDet != 0) return false;
  return true;
}

namespace {

bool quickCertify(const IntMatrix& a, const MassagerBundle& bundle, const Int& dAbs) {
  if (bundle.s.det() != dAbs) return false;
  const IntMatrix am = matMul(a, bundle.m.toMatrix());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (posRem(am.at(i, j), bundle.s.s(j)) != 0) return false;
  return true;
}

}  // namespace

CompactHermite hermiteForm(const IntMatrix& a, bool verify) {
  if (!a.isSquare()) throw std::invalid_argument("hermiteForm: matrix must be square");
  Int d = detBareiss(a);
  if (d == 0) throw SingularError("hermiteForm: singular matrix");
  if (d < 0) d = -d;

  const MassagerBundle bundle = smithMassager(a, d);
  if (!quickCertify(a, bundle, d))
    throw CertifyFail("FAIL: Smith massager rejected by certification");

  Int p = bundle.p;
  std::string lastError = "FAIL";
  for (int attempt = 0; attempt < 2; ++attempt) {
    try {
      const std::vector<Int> diag = hermiteDiagonals(bundle.m);
      const RowReducedMultiplier u = specialHowellTransform(bundle.m, diag, p);
      CompactHermite h = hermiteViaHowell(bundle.m, u, diag, p);
      if (!verify || verifyHermite(a, h, d)) return h;
      lastError = "FAIL: result rejected by certification";
    } catch (const CertifyFail& e) {
      lastError = e.what();
    }
    p = nextAdmissiblePrime(p, bundle.s);
  }
  throw CertifyFail(lastError);
}

CompactHermite rectangularHnf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n)
    throw std::invalid_argument("rectangularHnf: need at least as many rows as columns");
  if (m == n) return hermiteForm(a);

  // Row permutation making the top n x n block nonsingular; the row lattice
  // (hence the Hermite form) is unchanged.
  const std::vector<std::size_t> sel = detail::selectIndependentRows(a);
  std::vector<bool> used(m, false);
  std::vector<std::size_t> order = sel;
  for (std::size_t i : sel) used[i] = true;
  for (std::size_t i = 0; i < m; ++i)
    if (!used[i]) order.push_back(i);

  const std::size_t blocks = (m + n - 1) / n;
  IntMatrix cur(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cur.at(i, j) = a.at(order[i], j);

  for (std::size_t blk = 1; blk < blocks; ++blk) {
    IntMatrix stacked(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = cur.at(i, j);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t src = blk * n + i;
      if (src < m)
        for (std::size_t j = 0; j < n; ++j) stacked.at(n + i, j) = a.at(order[src], j);
      stacked.at(n + i, n + i) = 1;
    }
    const CompactHermite hs = hermiteForm(stacked);
    const IntMatrix full = hs.expand();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cur.at(i, j) = full.at(i, j);
  }
  return compress(cur);
}

}  // namespace exacthnf
