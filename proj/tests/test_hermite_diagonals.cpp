#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exacthnf/denominators.hpp"
#include "exacthnf/hermite_diagonals.hpp"
#include "exacthnf/smith_massager.hpp"
#include "testutil.hpp"

using namespace exacthnf;
using namespace exacthnf::testutil;

TEST_CASE("hermiteDiagonals on the published massagers") {
  SUBCASE("factors 1,3,15,105 give diagonal 1,15,15,21") {
    ReducedMassager m = ReducedMassager::fromMatrix(sampleAMassager(), sampleASmith());
    const std::vector<Int> want{Int(1), Int(15), Int(15), Int(21)};
    CHECK(hermiteDiagonals(m) == want);
  }

  SUBCASE("single factor 16 gives diagonal 4,1,2,2") {
    ReducedMassager m = ReducedMassager::fromMatrix(sampleBMassager(), sampleBSmith());
    const std::vector<Int> want{Int(4), Int(1), Int(2), Int(2)};
    CHECK(hermiteDiagonals(m) == want);
  }

  SUBCASE("trivial Smith form gives all ones") {
    SmithForm s(std::vector<Int>(4, Int(1)));
    CHECK(hermiteDiagonals(ReducedMassager::zero(s)) ==
          std::vector<Int>(4, Int(1)));
  }
}

TEST_CASE("hermiteDiagonals properties on random inputs") {
  Rng rng(211);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 7));
    IntMatrix a = randomNonsingular(n, 5, rng);
    MassagerBundle b = smithMassager(a);
    const std::vector<Int> diag = hermiteDiagonals(b.m);

    Int prod(1);
    for (const Int& h : diag) prod *= h;
    CHECK(prod == b.s.det());

    CompactHermite href = classicalHnf(a);
    for (std::size_t j = 0; j < n; ++j) CHECK(diag[j] == href.diag(j));

    // every diagonal must divide the largest invariant factor
    for (const Int& h : diag) CHECK(b.s.s() % h == 0);
  }
}

TEST_CASE("hermiteDiagonals rejects inconsistent input") {
  // Claiming extra invariant-factor mass that the massager cannot certify
  // trips the product check.
  SmithForm s({Int(1), Int(4)});
  IntMatrix mm(2, 2);
  mm.at(0, 1) = 2;  // column (2,0): denominator of (2,0)/4 has det 2, not 4
  ReducedMassager m = ReducedMassager::fromMatrix(mm, s);
  CHECK_THROWS_AS(hermiteDiagonals(m), CertifyFail);
}
