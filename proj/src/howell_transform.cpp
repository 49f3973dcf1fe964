#include "exacthnf/howell_transform.hpp"

#include <algorithm>
#include <cassert>

#include "exacthnf/denominators.hpp"
#include "exacthnf/scaled_matvec.hpp"

namespace exacthnf {

bool checkHowellStep(const HowellStep& step, const Int& s) {
  if (step.a.size() != step.c.size() || step.a.empty()) return false;
  if (step.h < 1) return false;
  Int sum(0);
  for (std::size_t i = 0; i < step.a.size(); ++i) sum += step.c[i] * step.a[i];
  if (posRem(sum, step.h) != posRem(Int(1), step.h)) return false;
  return coprime(step.c.back(), s);
}

namespace {

std::size_t trailingZeros(const std::vector<Int>& col) {
  std::size_t z = 0;
  for (std::size_t i = col.size(); i-- > 0 && col[i] == 0;) ++z;
  return z;
}

std::vector<Int> reversed(const std::vector<Int>& v) {
  return {v.rbegin(), v.rend()};
}

// Exact membership of x in the row lattice of a full-rank upper-triangular
// basis (back substitution with divisibility tests).
bool inTriangularLattice(std::vector<Int> x, const IntMatrix& basis) {
  const std::size_t n = basis.rows();
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (x[pos] == 0) continue;
    if (x[pos] % basis.at(pos, pos) != 0) return false;
    const Int q = x[pos] / basis.at(pos, pos);
    for (std::size_t j = pos; j < n; ++j) x[j] -= q * basis.at(pos, j);
  }
  for (const Int& v : x)
    if (v != 0) return false;
  return true;
}

}  // namespace

bool verifyHowell(const IntMatrix& t, const Int& s, std::string* reason) {
  auto fail = [&](const char* msg) {
    if (reason) *reason = msg;
    return false;
  };
  if (s <= 0) throw std::invalid_argument("verifyHowell: modulus must be positive");
  if (!t.isSquare()) return fail("matrix is not square");
  const std::size_t n = t.rows();
  if (s == 1) return true;

  IntMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j && posRem(t.at(i, j), s) != 0) return fail("matrix is not upper triangular");
      w.at(i, j) = posRem(t.at(i, j), s);
    }
  for (std::size_t j = 0; j < n; ++j) {
    const Int tj = w.at(j, j) == 0 ? s : w.at(j, j);
    if (s % tj != 0) return fail("diagonal entry does not divide the modulus");
  }

  // Triangular basis (in reversed coordinates) of the column lattice + s*Z^n.
  std::vector<std::vector<Int>> gen(n);
  std::vector<std::size_t> tz(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = w.column(j);
    tz[j] = trailingZeros(col);
    gen[j] = reversed(col);
  }
  const IntMatrix full = detail::hnfModStack(gen, n, s);

  // Basis vector with pivot at reversed position r has exactly r trailing
  // zeros; it must lie in the span of the columns with at least r of them.
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::vector<Int>> sub;
    for (std::size_t j = 0; j < n; ++j)
      if (tz[j] >= r) sub.push_back(gen[j]);
    const IntMatrix basis = detail::hnfModStack(std::move(sub), n, s);
    if (!inTriangularLattice(full.row(r), basis))
      return fail("span condition violated");
  }
  return true;
}

std::vector<Int> solveUnitCombination(const std::vector<Int>& a, const Int& h,
                                      const Int& s) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("solveUnitCombination: empty input");
  if (h < 1) throw std::invalid_argument("solveUnitCombination: h must be positive");
  if (h == 1) {
    std::vector<Int> c(n, Int(0));
    c[n - 1] = liftCoprime(Int(1), Int(1), s);
    return c;
  }

  Int g = h;
  for (const Int& v : a) g = gcdInt(g, v);
  if (g != 1)
    throw CertifyFail("solveUnitCombination: entries share a factor with the modulus");

  // Stabilize: b := a_n + sum d_j a_j with gcd(b, h) = 1.
  std::vector<Int> d(n - 1, Int(0));
  Int b = posRem(a[n - 1], h);
  for (std::size_t j = 0; j + 1 < n && gcdInt(b, h) != 1; ++j) {
    if (posRem(a[j], h) == 0) continue;
    const Int target = gcdInt(gcdInt(b, a[j]), h);
    Int t(0);
    while (gcdInt(posRem(b + t * a[j], h), h) != target) ++t;
    d[j] = t;
    b = posRem(b + t * a[j], h);
  }
  if (gcdInt(b, h) != 1)
    throw CertifyFail("solveUnitCombination: stabilization failed");

  const Int binv = invertMod(b, h);
  std::vector<Int> c(n);
  for (std::size_t j = 0; j + 1 < n; ++j) c[j] = posRem(binv * d[j], h);
  c[n - 1] = liftCoprime(posRem(binv, h), h, s);
  return c;
}

RowReducedMultiplier specialHowellTransform(const ReducedMassager& m,
                                            const std::vector<Int>& diag,
                                            const Int& p) {
  const SmithForm& s = m.smith();
  const std::size_t n = s.size();
  if (m.dim() != n) throw std::invalid_argument("specialHowellTransform: not square");
  if (diag.size() != n)
    throw std::invalid_argument("specialHowellTransform: diagonal count mismatch");
  const Int& sn = s.s();
  if (sn == 1) return RowReducedMultiplier::augmentedIdentity(s, n);

  // n x 2n sweep state, rows kept reduced mod S throughout.
  RowReducedMultiplier ubar = RowReducedMultiplier::augmentedIdentity(s, 2 * n);
  const std::size_t first = s.firstNontrivial();

  for (std::size_t iter = 0; iter < n; ++iter) {
    const std::size_t jj = n - 1 - iter;  // pivot row of M this iteration
    const Int& h = diag[jj];
    const std::size_t win = jj + 1;  // window = columns [win, win + n)
    if (h == 1) {
      // Unit diagonal: the pivot row of the window is already zero mod s, so
      // both elimination steps degenerate, but the finalized column must still
      // be deposited into the incoming window column (the W step with h = 1
      // and all a_b = 0) or later pivots lose its span.
      for (std::size_t r = first; r < n; ++r)
        ubar.setEntry(r, jj, ubar.entry(r, win + n - 1));
      continue;
    }
    if (sn % h != 0)
      throw CertifyFail("specialHowellTransform: diagonal does not divide s");

    // Step 1: the pivot-row entries of the partial triangularization, scaled
    // down by s/h. Column c of the window transposed is row c of ubar.
    IntMatrix winT(n, n);
    for (std::size_t c = first; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) winT.at(r, c) = ubar.entry(c, win + r);
    const ReducedMassager mp = ReducedMassager::fromMatrix(winT, s);
    const std::vector<Int> a = scaledMatVecProd(mp, m.row(jj), h, p);

    // Step 2
    const std::vector<Int> c = solveUnitCombination(a, h, sn);
    assert(checkHowellStep(HowellStep{iter, h, a, c}, sn));

    // Step 3: apply the two unimodular column updates, rowmod throughout.
    // First the combination column (the only nontrivial column of C_i).
    std::vector<Int> pending(n, Int(0));
    for (std::size_t r = first; r < n; ++r) {
      const Int& sr = s.s(r);
      Int sum(0);
      for (std::size_t b = 0; b < n; ++b) {
        const Int& urb = ubar.entry(r, win + b);
        if (urb == 0 || c[b] == 0) continue;
        instrument::countMul(c[b], urb);
        sum += posRem(c[b] * urb, sr);
        if (sum >= sr) sum -= sr;
      }
      pending[r] = posRem(sum, sr);
    }
    for (std::size_t r = first; r < n; ++r)
      ubar.setEntry(r, win + n - 1, pending[r]);

    // Then the rank-one update of W_i: the pivot column feeds column jj with
    // factor h and columns jj+1..jj+n-1 with factors -a_b.
    for (std::size_t r = first; r < n; ++r) {
      const Int& sr = s.s(r);
      const Int x = ubar.entry(r, win + n - 1);
      if (x == 0) continue;
      instrument::countMul(h, x);
      ubar.setEntry(r, jj, posRem(ubar.entry(r, jj) + h * x, sr));
      for (std::size_t b = 1; b < n; ++b) {
        if (a[b - 1] == 0) continue;
        instrument::countMul(a[b - 1], x);
        ubar.setEntry(r, jj + b, posRem(ubar.entry(r, jj + b) - a[b - 1] * x, sr));
      }
    }
  }

  return ubar.trailingColumns(n);
}

}  // namespace exacthnf
