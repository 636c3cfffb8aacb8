#include <doctest.h>

#include <set>

#include "regover/arith.hpp"
#include "regover/errors.hpp"

using namespace regover;

TEST_CASE("divisor_stats examples") {
  const DivisorStats a = divisor_stats(6, 2, 3);
  CHECK(a.tau == 4);
  CHECK(a.m_ell == 2);
  CHECK(a.m_mu == 2);
  CHECK(a.m_ellmu == 1);
  CHECK(a.delta == 1);

  const DivisorStats b = divisor_stats(1, 7, 9);
  CHECK(b.tau == 1);
  CHECK(b.m_ell == 0);
  CHECK(b.m_mu == 0);
  CHECK(b.m_ellmu == 0);
  CHECK(b.delta == 1);

  const DivisorStats c = divisor_stats(4, 4, 3);
  CHECK(c.tau == 3);
  CHECK(c.m_ell == 1);
  CHECK(c.m_mu == 0);
  CHECK(c.delta == 2);
}

TEST_CASE("multiple-counting definition of m(ell|n)") {
  // tau(n/ell) equals the number of multiples of ell dividing n
  for (long n = 1; n <= 10000; ++n) {
    for (long ell : {2L, 3L, 5L, 12L}) {
      long direct = 0;
      for (long d : divisors(n))
        if (d % ell == 0) ++direct;
      const long via_tau = (n % ell == 0) ? tau(n / ell) : 0;
      REQUIRE(direct == via_tau);
    }
  }
}

TEST_CASE("squares_mod") {
  CHECK(squares_mod(9) == std::set<long>{1, 4, 7});
  CHECK(squares_mod(1) == std::set<long>{0});
  CHECK(squares_mod(8) == std::set<long>{1});
  CHECK(squares_mod(5) == std::set<long>{1, 4});
}

TEST_CASE("squares_mod is closed under multiplication") {
  for (long m = 1; m <= 100; ++m) {
    const auto sq = squares_mod(m);
    for (long a : sq)
      for (long b : sq) REQUIRE(sq.count((a * b) % m) == 1);
  }
}

TEST_CASE("inv_mod") {
  CHECK(inv_mod(3, 5) == 2);
  CHECK(inv_mod(1, 7) == 1);
  CHECK(inv_mod(3, 7) == 5);
  CHECK(inv_mod(-2, 5) == 2);  // -2 = 3 mod 5, 3*2 = 6 = 1
  CHECK_THROWS_AS(inv_mod(6, 9), NotInvertible);
}

TEST_CASE("is_qnr") {
  CHECK(is_qnr(2, 5));
  CHECK(!is_qnr(4, 5));
  CHECK(!is_qnr(0, 5));
  CHECK(!is_qnr(10, 5));
  CHECK(is_qnr(3, 7));
  CHECK(!is_qnr(2, 7));
}

TEST_CASE("index_gamma0") {
  CHECK(index_gamma0(1) == 1);
  CHECK(index_gamma0(12) == 24);
  CHECK(index_gamma0(30) == 72);
  CHECK(index_gamma0(60) == 144);
}

TEST_CASE("square detection") {
  CHECK(is_square(0));
  CHECK(is_square(1));
  CHECK(is_square(144));
  CHECK(!is_square(2));
  CHECK(!is_square(143));
  CHECK(isqrt64(145) == 12);
}

TEST_CASE("primality and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  CHECK(is_squarefree(30));
  CHECK(!is_squarefree(60));
  const auto f = factorize(60);
  CHECK(f == std::vector<std::pair<long, int>>{{2, 2}, {3, 1}, {5, 1}});
  CHECK(divisors(30) == std::vector<long>{1, 2, 3, 5, 6, 10, 15, 30});
}
