#include <catch_amalgamated.hpp>

#include <random>

#include "crinv/rational.hpp"
#include "crinv/spectral.hpp"
#include "crinv/sphere_oracle.hpp"

using namespace crinv;

namespace {

Rational rat(int num, int den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("type invariants") {
  CHECK_THROWS_AS(Geometry(0, rat(1)), InvalidDimension);
  CHECK_THROWS_AS(Mode(rat(-1), rat(0)), SpecViolation);
  CHECK_NOTHROW(Mode(rat(0), rat(-5)));  // q may be negative, p may not
}

TEST_CASE("L_mu eigenvalue") {
  // (n-mu) = 0 kills the constant term, p = q = 0 kills the rest
  CHECK(l_mu_eigenvalue(Geometry(2, rat(1)), rat(2), Mode(rat(0), rat(0))) == 0);
  // 3 + 0 + 1
  CHECK(l_mu_eigenvalue(Geometry(2, rat(1)), rat(0), Mode(rat(6), rat(1))) == 4);
  // the Riemann-surface tube eigenvalue 2(n-1)/(n+1) at n=2 makes L_0 vanish
  CHECK(l_mu_eigenvalue(Geometry(2, rat(-1, 3)), rat(0),
                        Mode(rat(2, 3), rat(0))) == 0);
}

TEST_CASE("GJMS eigenvalue factorization") {
  // P_{0,0} annihilates constants (the j = 0 factor has mu = n)
  for (unsigned n = 1; n <= 6; ++n)
    for (int lnum : {-2, -1, 0, 1, 3})
      CHECK(gjms_eigenvalue(Geometry(n, rat(lnum, 3)), Weight{rat(0), rat(0)},
                            Mode(rat(0), rat(0))) == 0);

  // four factors 4 * 6 * 6 * 4
  CHECK(gjms_eigenvalue(Geometry(1, rat(1)), Weight{rat(1), rat(1)},
                        Mode(rat(12), rat(0))) == 576);

  // k = 2, and the L_1 factor is 1/2 - 1/2 + 0 = 0
  CHECK(gjms_eigenvalue(Geometry(1, rat(1)), Weight{rat(0), rat(0)},
                        Mode(rat(1), rat(-1))) == 0);

  // order must be a positive integer
  CHECK_THROWS_AS(gjms_eigenvalue(Geometry(1, rat(1)),
                                  Weight{rat(1, 2), rat(0)},
                                  Mode(rat(1), rat(0))),
                  InvalidOrder);
  CHECK_THROWS_AS(gjms_eigenvalue(Geometry(1, rat(1)),
                                  Weight{rat(-3), rat(1)},
                                  Mode(rat(1), rat(0))),
                  InvalidOrder);
  // ... and k = n + 3 > n + 1 is legal by design (P_{1,1} exists)
  CHECK_NOTHROW(gjms_eigenvalue(Geometry(3, rat(2)), Weight{rat(1), rat(1)},
                                Mode(rat(5), rat(1))));
}

TEST_CASE("conjugation symmetry of GJMS eigenvalues") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> small(-8, 8);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<unsigned> ns(1, 4);
  std::uniform_int_distribution<int> ks(1, 6);
  for (int i = 0; i < 500; ++i) {
    const Geometry g(ns(rng), Rational(small(rng), den(rng)));
    const Mode m(Rational(std::abs(small(rng)), den(rng)),
                 Rational(small(rng), den(rng)));
    const Mode conj(m.p, -m.q);
    // pick w' freely, then w so that k = w + w' + n + 1 is a chosen integer
    const Rational w_prime(small(rng), den(rng));
    const Rational w = Rational(ks(rng)) - w_prime - Rational(g.n) - 1;
    REQUIRE(gjms_eigenvalue(g, Weight{w, w_prime}, m) ==
            gjms_eigenvalue(g, Weight{w_prime, w}, conj));
  }
}

TEST_CASE("P' eigenvalue") {
  // annihilates constants for every geometry
  for (unsigned n = 1; n <= 5; ++n)
    for (int lnum : {-1, 0, 2})
      CHECK(pprime_eigenvalue(Geometry(n, rat(lnum, 2)),
                              Mode(rat(0), rat(0))) == 0);

  // n = 1: empty product = 1, so P' = p^2 + lambda p = 1 + 1 = 2
  CHECK(pprime_eigenvalue(Geometry(1, rat(1)), Mode(rat(1), rat(-1))) == 2);

  // n = 2: (1/2)(4 + 8) * L_0(2,-1) = 6 * 2 = 12
  CHECK(pprime_eigenvalue(Geometry(2, rat(1)), Mode(rat(2), rat(-1))) == 12);

  // S^3 holomorphic modes (p, q) = (a, -a): eigenvalue a(a+1)
  for (int a = 0; a <= 5; ++a)
    CHECK(pprime_eigenvalue(Geometry(1, rat(1)), Mode(rat(a), rat(-a))) ==
          rat(a * (a + 1)));

  CHECK_THROWS_AS(pprime_eigenvalue(Geometry(2, rat(1)), Mode(rat(3), rat(1))),
                  NotPluriharmonic);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(Geometry(2, rat(1)), Mode(rat(3), rat(1))));
  CHECK_FALSE(is_admissible(Geometry(2, rat(1)), Mode(rat(1), rat(1))));
  CHECK(is_admissible(Geometry(1, rat(1)), Mode(rat(1), rat(-1))));  // boundary
}

TEST_CASE("deformation kernels") {
  const Geometry s3(1, rat(1));
  // sphere CR-holomorphic mode: first (5.1) factor vanishes
  CHECK(in_kernel_d(s3, Mode(rat(1), rat(-1))));
  // plain interior mode: factors 6 and 4
  CHECK_FALSE(in_kernel_d(s3, Mode(rat(12), rat(0))));
  // Thm 1.6 tube mode is NOT in ker D: factors 1/3 and 4/3
  CHECK_FALSE(in_kernel_d(Geometry(2, rat(-1, 3)), Mode(rat(2, 3), rat(0))));

  // conjugate of the holomorphic example
  CHECK(in_kernel_dbar(s3, Mode(rat(1), rat(1))));
  // (n=1, p=1, q=-1): (5.2) = (1/2 + 1/2)(1/2 + 3/2 - 2) = 1 * 0 = 0, so the
  // mode lies in ker Dbar as well — degree-1 sphere modes generate CR
  // automorphisms and sit in both kernels
  CHECK(in_kernel_dbar(s3, Mode(rat(1), rat(-1))));
  // ... whereas a = 2 does not: (5.2) = 2 * (2*2 - 2) = 4
  CHECK_FALSE(in_kernel_dbar(s3, Mode(rat(2), rat(-2))));
  // sphere mode H_{1,0} at n = 2: (5.2) = (1+1)(1+2-3) = 0
  CHECK(in_kernel_dbar(Geometry(2, rat(1)), Mode(rat(2), rat(-1))));
}

TEST_CASE("kernel predicate matches the (5.1) product code path") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> small(-10, 10);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<unsigned> ns(1, 4);
  for (int i = 0; i < 2000; ++i) {
    const Geometry g(ns(rng), Rational(small(rng), den(rng)));
    const Mode m(Rational(std::abs(small(rng)), den(rng)),
                 Rational(small(rng), den(rng)));
    REQUIRE(in_kernel_d(g, m) == (kernel_d_product(g, m) == 0));
    REQUIRE(in_kernel_dbar(g, m) == (kernel_dbar_product(g, m) == 0));
    // the kernel products are gjms-style L-eigenvalue products
    const Rational n(g.n);
    REQUIRE(kernel_d_product(g, m) ==
            l_mu_eigenvalue(g, n, m) * l_mu_eigenvalue(g, n + 2, m));
    REQUIRE(kernel_dbar_product(g, m) ==
            l_mu_eigenvalue(g, -n, m) * l_mu_eigenvalue(g, -n - 2, m));
  }
}

TEST_CASE("edge inequalities") {
  CHECK(edge_inequalities_hold(Geometry(1, rat(1)), Mode(rat(12), rat(0))));
  // (5.1) vanishes, (5.2) vanishes: boundary mode passes
  CHECK(edge_inequalities_hold(Geometry(1, rat(1)), Mode(rat(1), rat(-1))));
  // large lambda pushes (5.1) negative: (1/2)(1/2 - 30) < 0
  CHECK_FALSE(edge_inequalities_hold(Geometry(2, rat(10)), Mode(rat(1), rat(0))));
}

TEST_CASE("middle-factor lower bound on the admissible grid") {
  // For lambda >= 0, p >= n|q| and 2 <= j <= n:
  //   1/2 p + 1/2 (n+2-2j) q + lambda (j-1)(n+1-j)
  //     >= (p/2) (1 - |n+2-2j|/n) >= 0, exactly.
  for (unsigned n = 2; n <= 4; ++n) {
    const Rational nn(n);
    for (int lnum : {0, 1, 2}) {
      const Geometry g(n, rat(lnum, 2));
      for (int pnum = 0; pnum <= 24; ++pnum) {
        for (int qnum = -12; qnum <= 12; ++qnum) {
          const Mode m(rat(pnum, 3), rat(qnum, 3));
          if (!is_admissible(g, m)) continue;
          for (unsigned j = 2; j <= n; ++j) {
            const Rational jj(j);
            const Rational factor = m.p / 2 + (nn + 2 - 2 * jj) * m.q / 2 +
                                    g.lambda * (jj - 1) * (nn + 1 - jj);
            const Rational bound =
                m.p / 2 * (1 - abs(nn + 2 - 2 * jj) / nn);
            REQUIRE(factor >= bound);
            REQUIRE(bound >= 0);
          }
        }
      }
    }
  }
}

TEST_CASE("P_{0,0} annihilates pluriharmonic sphere fixtures") {
  for (unsigned n = 1; n <= 3; ++n) {
    const Geometry g(n, rat(1));
    for (const auto& [bd, m] : enumerate_modes(n, 6)) {
      if (bd.a != 0 && bd.b != 0) continue;
      CHECK(gjms_eigenvalue(g, Weight{rat(0), rat(0)}, m) == 0);
    }
  }
}
