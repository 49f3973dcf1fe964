#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exacthnf/denominators.hpp"
#include "testutil.hpp"

using namespace exacthnf;
using namespace exacthnf::testutil;

namespace {

// Denominator property: H * w ≡ 0 (mod d).
void checkAnnihilates(const CompactHermite& h, const std::vector<Int>& w, const Int& d) {
  const IntMatrix hm = h.expand();
  for (std::size_t i = 0; i < hm.rows(); ++i) {
    Int sum(0);
    for (std::size_t j = 0; j < hm.cols(); ++j) sum += hm.at(i, j) * w[j];
    CHECK(posRem(sum, d) == 0);
  }
}

}  // namespace

TEST_CASE("hcol") {
  SUBCASE("known 4x1 column over 16") {
    CompactHermite h = hcol({Int(1), Int(4), Int(4), Int(8)}, Int(16));
    CHECK(h.expand() == sampleBHermite());
  }

  SUBCASE("zero vector and unit denominator give the identity") {
    CHECK(hcol(std::vector<Int>(5, Int(0)), Int(12)).isIdentity());
    CHECK(hcol({Int(0), Int(0)}, Int(1)).isIdentity());
  }

  SUBCASE("random columns agree with the brute-force oracle") {
    Rng rng(13);
    for (int t = 0; t < 120; ++t) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
      const Int d(rng.uniform(1, 1000));
      std::vector<Int> w(n);
      IntMatrix b(n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = posRem(Int(rng.uniform(0, 100000)), d);
        b.at(i, 0) = w[i];
      }
      CompactHermite fast = hcol(w, d);
      CompactHermite exact = minimalDenominatorOracle(b, d);
      CHECK(fast == exact);
      CHECK(d % fast.det() == 0);
      checkAnnihilates(fast, w, d);
    }
  }
}

TEST_CASE("minimalDenominatorOracle") {
  SUBCASE("known column") {
    IntMatrix b(4, 1);
    b.at(0, 0) = 1;
    b.at(1, 0) = 4;
    b.at(2, 0) = 4;
    b.at(3, 0) = 8;
    CHECK(minimalDenominatorOracle(b, Int(16)).expand() == sampleBHermite());
  }

  SUBCASE("scaled inverse has the Hermite form as denominator") {
    CHECK(minimalDenominatorOracle(sampleBScaledInverse(), Int(16)).expand() ==
          sampleBHermite());
  }

  SUBCASE("zero matrix has denominator I") {
    CHECK(minimalDenominatorOracle(IntMatrix(3, 2), Int(30)).isIdentity());
  }

  SUBCASE("the minimal determinant divides the determinant of other denominators") {
    Rng rng(109);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
      const Int s(rng.uniform(2, 120));
      IntMatrix b(n, 2);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = rng.uniform(0, 300);
      CompactHermite h = minimalDenominatorOracle(b, s);
      // s*I is always a denominator of B/s
      Int sn(1);
      for (std::size_t i = 0; i < n; ++i) sn *= s;
      CHECK(sn % h.det() == 0);
    }
  }

  SUBCASE("right multiplication by a unimodular matrix changes nothing") {
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
      const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
      const Int s(rng.uniform(2, 200));
      IntMatrix b(n, m);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) b.at(i, j) = rng.uniform(-50, 50);
      IntMatrix u = randomUnimodular(rng, m);
      CHECK(minimalDenominatorOracle(b, s) ==
            minimalDenominatorOracle(matMul(b, u), s));
    }
  }
}

TEST_CASE("composeDenominators") {
  SUBCASE("identity on the left expands the right factor") {
    CompactHermite h1 = compress(sampleBHermite());
    CHECK(composeDenominators(CompactHermite(4), h1) == sampleBHermite());
  }

  SUBCASE("the four recovered factors of the known example multiply to its Hermite form") {
    CompactHermite h1 = CompactHermite::singleColumn(4, 0, {Int(4)});
    CompactHermite h2 = CompactHermite(4);  // trivial column
    CompactHermite h3 = CompactHermite::singleColumn(4, 2, {Int(1), Int(1), Int(2)});
    CompactHermite h4 =
        CompactHermite::singleColumn(4, 3, {Int(1), Int(1), Int(1), Int(2)});
    IntMatrix acc = composeDenominators(h2, h1);
    acc = composeDenominators(h3, acc);
    acc = composeDenominators(h4, acc);
    CHECK(acc == sampleBHermite());
  }

  SUBCASE("diagonal of a product is the pointwise product of diagonals") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
      CompactHermite a = classicalHnf(randomNonsingular(4, 4, rng));
      CompactHermite b = classicalHnf(randomNonsingular(4, 4, rng));
      IntMatrix p = composeDenominators(a, b);
      for (std::size_t j = 0; j < 4; ++j) CHECK(p.at(j, j) == a.diag(j) * b.diag(j));
    }
  }

  SUBCASE("split composition agrees with the direct oracle") {
    Rng rng(29);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 3;
      const Int s(rng.uniform(2, 150));
      IntMatrix b(n, 2);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = rng.uniform(0, 200);
      IntMatrix b1(n, 1), b2(n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        b1.at(i, 0) = b.at(i, 0);
        b2.at(i, 0) = b.at(i, 1);
      }
      CompactHermite h1 = minimalDenominatorOracle(b1, s);
      CompactHermite h2 = minimalDenominatorOracle(matMul(h1.expand(), b2), s);
      CompactHermite direct = minimalDenominatorOracle(b, s);
      CHECK(classicalHnf(composeDenominators(h2, h1)) == direct);
    }
  }
}

TEST_CASE("classicalHnf") {
  SUBCASE("known 4x4 inputs") {
    CHECK(classicalHnf(sampleA()).expand() == sampleAHermite());
    CHECK(classicalHnf(sampleB()).expand() == sampleBHermite());
    CHECK(classicalHnf(IntMatrix::identity(6)).isIdentity());
  }

  SUBCASE("singular input is rejected") {
    IntMatrix sing{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(classicalHnf(sing), SingularError);
  }

  SUBCASE("the row lattice is preserved: H = U A for unimodular U") {
    Rng rng(37);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
      IntMatrix a = randomNonsingular(n, 6, rng);
      CompactHermite h = classicalHnf(a);
      // uniqueness under unimodular row transforms
      IntMatrix ua = matMul(randomUnimodular(rng, n), a);
      CHECK(classicalHnf(ua) == h);
      Int da = detBareiss(a);
      CHECK(h.det() == (da < 0 ? -da : da));
    }
  }

  SUBCASE("rectangular full-column-rank input") {
    IntMatrix a{{2, 0}, {0, 2}, {1, 1}};
    IntMatrix want{{1, 1}, {0, 2}};  // index-2 sublattice spanned by the three rows
    CHECK(classicalHnf(a).expand() == want);
    IntMatrix rankDef{{1, 2}, {2, 4}, {3, 6}};
    CHECK_THROWS_AS(classicalHnf(rankDef), SingularError);
  }
}

TEST_CASE("detBareiss and adjugateScaled") {
  CHECK(detBareiss(sampleA()) != 0);
  Int dA = detBareiss(sampleA());
  CHECK((dA < 0 ? -dA : dA) == 4725);
  Int dB = detBareiss(sampleB());
  CHECK((dB < 0 ? -dB : dB) == 16);

  SUBCASE("scaled inverse of the known matrix") {
    CHECK(adjugateScaled(sampleB(), Int(16)) == sampleBScaledInverse());
  }

  SUBCASE("A * (d A^{-1}) = d I on random inputs") {
    Rng rng(43);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
      IntMatrix a = randomNonsingular(n, 8, rng);
      Int d = detBareiss(a);
      if (d < 0) d = -d;
      IntMatrix adj = adjugateScaled(a, d);
      IntMatrix prod = matMul(a, adj);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(prod.at(i, j) == (i == j ? d : Int(0)));
    }
  }

  SUBCASE("2x2 cross check") {
    IntMatrix a{{3, 7}, {2, 5}};
    CHECK(detBareiss(a) == 1);
    IntMatrix z{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(detBareiss(z) == 0);
  }
}
