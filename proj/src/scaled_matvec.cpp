#include "exacthnf/scaled_matvec.hpp"

#include "exacthnf/modular_kernels.hpp"

namespace exacthnf {

namespace {

std::size_t blockLengthFor(const Int& si, const Int& x) {
  if (si == 1) return 0;
  std::size_t k = 1;
  Int pw = x;
  while (pw < si) {
    pw *= x;
    ++k;
  }
  return k;
}

void validateVector(const std::vector<Int>& u, const SmithForm& s, const char* who) {
  if (u.size() != s.size()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] < 0 || u[i] >= s.s(i))
      throw std::invalid_argument(std::string(who) + ": vector not row-reduced mod S");
}

}  // namespace

DualModuli chooseModuli(const Int& h, const SmithForm& s, const Int& p) {
  if (h < 1 || s.s() % h != 0)
    throw std::invalid_argument("chooseModuli: h must be a positive divisor of s");
  if (!isOddPrime(p) || !coprime(p, s.s()))
    throw std::invalid_argument("chooseModuli: p must be an odd prime coprime to s");
  const Int detS = s.det();
  const unsigned long logBound = std::max(1ul, ceilLog2(detS));
  Int bound = 2 * h * logBound;
  Int x = Int(1) << ceilLog2(bound);
  if (x < 2) x = 2;
  const Int x2 = x * x;
  Int y = p;
  while (y <= x2) y *= p;
  return DualModuli{std::move(x), std::move(y), h, p};
}

Linearization linearize(const ReducedMassager& m, const Int& x) {
  if (x < 2) throw std::invalid_argument("linearize: radix must be at least 2");
  const SmithForm& s = m.smith();
  const std::size_t n = s.size();
  Linearization lin;
  lin.radix = x;
  lin.rows = m.dim();
  lin.blockLen.resize(n);
  lin.offset.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    lin.blockLen[i] = blockLengthFor(s.s(i), x);
    lin.offset[i + 1] = lin.offset[i] + lin.blockLen[i];
  }
  lin.digits.assign(lin.rows * lin.offset[n], Int(0));
  const std::size_t total = lin.offset[n];
  for (std::size_t i = s.firstNontrivial(); i < n; ++i) {
    for (std::size_t r = 0; r < lin.rows; ++r) {
      Int v = m.entry(r, i);
      for (std::size_t t = 0; t < lin.blockLen[i] && v != 0; ++t) {
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
        lin.digits[r * total + lin.offset[i] + t] = std::move(rem);
        v = std::move(q);
      }
    }
  }
  return lin;
}

std::vector<std::vector<Int>> uVectors(const std::vector<Int>& u, const SmithForm& s,
                                       const Int& x) {
  validateVector(u, s, "uVectors");
  if (x < 2) throw std::invalid_argument("uVectors: radix must be at least 2");
  std::vector<std::vector<Int>> blocks(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t k = blockLengthFor(s.s(i), x);
    blocks[i].resize(k);
    Int a = u[i];
    for (std::size_t t = 0; t < k; ++t) {
      if (t) {
        instrument::countMul(a, x);
        a = posRem(a * x, s.s(i));
      }
      blocks[i][t] = a;
    }
  }
  return blocks;
}

std::vector<std::vector<Int>> wVectors(const std::vector<Int>& u, const SmithForm& s,
                                       const Int& x, const Int& y) {
  auto blocks = uVectors(u, s, x);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (blocks[i].empty()) continue;
    Int sbar;
    if (mpz_invert(sbar.get_mpz_t(), s.s(i).get_mpz_t(), y.get_mpz_t()) == 0)
      throw CertifyFail("wVectors: invariant factor not invertible mod Y (bad prime)");
    for (Int& a : blocks[i]) a = modMul(a, sbar, y);
  }
  return blocks;
}

std::vector<Int> scaledMatVecProd(const ReducedMassager& m, const std::vector<Int>& u,
                                  const Int& h, const Int& p) {
  const SmithForm& s = m.smith();
  const std::size_t n = s.size();
  validateVector(u, s, "scaledMatVecProd");
  if (h < 1 || s.s() % h != 0)
    throw std::invalid_argument("scaledMatVecProd: h must be a positive divisor of s");
  if (h == 1) return std::vector<Int>(m.dim(), Int(0));

  const DualModuli dm = chooseModuli(h, s, p);
  const Int& y = dm.y;
  const Linearization lin = linearize(m, dm.x);
  const std::size_t total = lin.totalCols();

  // Stream the u and w entries one at a time; only the mod-Y accumulator is
  // kept besides the linearized matrix.
  std::vector<Int> acc(m.dim(), Int(0));
  for (std::size_t i = s.firstNontrivial(); i < n; ++i) {
    const Int& si = s.s(i);
    Int sbar;
    if (mpz_invert(sbar.get_mpz_t(), si.get_mpz_t(), y.get_mpz_t()) == 0)
      throw CertifyFail("scaledMatVecProd: invariant factor not invertible mod Y");
    Int a = u[i];
    for (std::size_t t = 0; t < lin.blockLen[i]; ++t) {
      if (t) {
        instrument::countMul(a, dm.x);
        a = posRem(a * dm.x, si);
      }
      if (a == 0) continue;
      const Int w = modMul(a, sbar, y);
      if (w == 0) continue;
      const std::size_t c = lin.offset[i] + t;
      for (std::size_t r = 0; r < m.dim(); ++r) {
        const Int& dgt = lin.digits[r * total + c];
        if (dgt == 0) continue;
        instrument::countMul(dgt, w);
        acc[r] += posRem(dgt * w, y);
        if (acc[r] >= y) acc[r] -= y;
      }
    }
  }

  std::vector<Int> v(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    instrument::countMul(h, acc[r]);
    const Int b = posRem(h * acc[r], y);
    v[r] = posRem(b, h);
  }
  return v;
}

}  // namespace exacthnf
