#include "exacthnf/hermite_diagonals.hpp"

#include "exacthnf/denominators.hpp"
#include "exacthnf/modular_kernels.hpp"

namespace exacthnf {

std::vector<Int> hermiteDiagonals(const ReducedMassager& m0) {
  const SmithForm s = m0.smith();
  const std::size_t n = s.size();
  std::vector<Int> h(n, Int(1));

  ReducedMassager m = m0;
  for (std::size_t i = s.firstNontrivial(); i < n; ++i) {
    const CompactHermite hi = hcol(m.column(i), s.s(i));
    const auto& idx = hi.nontrivialIndices();
    for (std::size_t t = 0; t < idx.size(); ++t)
      h[idx[t]] *= hi.storedColumn(t)[idx[t]];
    if (i + 1 < n) m = hermiteTimesMassager(hi, m);
  }

  Int prod(1);
  for (const Int& v : h) prod *= v;
  if (prod != s.det())
    throw CertifyFail("hermiteDiagonals: diagonal product does not match det S");
  return h;
}

}  // namespace exacthnf
