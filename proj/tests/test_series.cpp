#include <doctest.h>

#include <random>
#include <vector>

#include "regover/eta.hpp"
#include "regover/kernels.hpp"
#include "regover/series.hpp"

using namespace regover;

namespace {

Series from_coeffs(const std::vector<long>& c) {
  Series s(IntCoeffs{}, static_cast<long>(c.size()) - 1);
  for (std::size_t i = 0; i < c.size(); ++i) s.at(i) = Int(c[i]);
  return s;
}

Series random_series(std::mt19937& rng, long trunc, bool unit_constant) {
  std::uniform_int_distribution<long> dist(-9, 9);
  Series s(IntCoeffs{}, trunc);
  for (long n = 0; n <= trunc; ++n) s.at(n) = Int(dist(rng));
  if (unit_constant) s.at(0) = (dist(rng) % 2 == 0) ? 1 : -1;
  return s;
}

}  // namespace

TEST_CASE("series_mul basics") {
  const Series a = from_coeffs({1, 1, 0});   // 1 + q
  const Series b = from_coeffs({1, -1, 0});  // 1 - q
  const Series p = mul(a, b);
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p[2] == -1);

  const Series one = Series::constant(IntCoeffs{}, 2, 1);
  CHECK(!first_mismatch(mul(a, one), a));
}

TEST_CASE("f1 cubed matches the triple-product expansion") {
  const long T = 10;
  const Series f1 =
      eta_expand(IntCoeffs{}, EtaQuotientSpec::from_map(1, {{1, 1}}), T);
  const Series cube = mul(mul(f1, f1), f1);
  // sum (-1)^j (2j+1) q^{j(j+1)/2}
  Series expected(IntCoeffs{}, T);
  for (long j = 0; j * (j + 1) / 2 <= T; ++j)
    expected.at(j * (j + 1) / 2) = Int((j % 2 ? -1 : 1) * (2 * j + 1));
  CHECK(!first_mismatch(cube, expected));
  CHECK(cube[0] == 1);
  CHECK(cube[1] == -3);
  CHECK(cube[3] == 5);
  CHECK(cube[6] == -7);
  CHECK(cube[10] == 9);
}

TEST_CASE("series_inv examples") {
  // geometric series
  const Series a = from_coeffs({1, -1, 0, 0});
  const Series inv_a = inverse(a);
  for (long n = 0; n <= 3; ++n) CHECK(inv_a[n] == 1);

  const Series one = Series::constant(IntCoeffs{}, 5, 1);
  CHECK(!first_mismatch(inverse(one), one));

  // partition numbers from 1/f_1, checked against direct enumeration
  const long T = 5;
  const Series f1 =
      eta_expand(IntCoeffs{}, EtaQuotientSpec::from_map(1, {{1, 1}}), T);
  const Series partitions = inverse(f1);
  // oracle: count partitions of n <= 5 by bounded recursion
  const auto count_partitions = [](long n) {
    std::vector<std::vector<long>> dp(n + 1, std::vector<long>(n + 1, 0));
    for (long maxp = 0; maxp <= n; ++maxp) dp[maxp][0] = 1;
    for (long maxp = 1; maxp <= n; ++maxp)
      for (long rem = 1; rem <= n; ++rem)
        dp[maxp][rem] =
            dp[maxp - 1][rem] + (rem >= maxp ? dp[maxp][rem - maxp] : 0);
    return dp[n][n];
  };
  for (long n = 0; n <= T; ++n) CHECK(partitions[n] == count_partitions(n));
  CHECK(partitions[5] == 7);

  const Series bad = from_coeffs({2, 1});
  CHECK_THROWS_AS(inverse(bad), NonUnitConstantTerm);
}

TEST_CASE("extract_ap") {
  const Series a = from_coeffs({1, 2, 3, 4});
  const Series odd = extract_ap(a, 2, 1);
  CHECK(odd.trunc() == 1);
  CHECK(odd[0] == 2);
  CHECK(odd[1] == 4);

  CHECK(!first_mismatch(extract_ap(a, 1, 0), a));

  const Series tiny = from_coeffs({1, 2});
  CHECK_THROWS_AS(extract_ap(tiny, 5, 3), EmptyExtraction);
  CHECK_THROWS_AS(extract_ap(tiny, 2, 2), std::invalid_argument);
}

TEST_CASE("truncation bookkeeping") {
  const Series a = from_coeffs({1, 2, 3, 4, 5});
  const Series b = from_coeffs({1, 1});
  CHECK(mul(a, b).trunc() == 1);
  CHECK(add(a, b).trunc() == 1);
  CHECK(shifted(b, 2).trunc() == 3);
  CHECK(shifted(b, 2)[2] == 1);
  CHECK(shifted(b, 2)[0] == 0);
}

TEST_CASE("ring laws on random series through q^50") {
  std::mt19937 rng(20240811);
  for (int rep = 0; rep < 25; ++rep) {
    const Series a = random_series(rng, 50, false);
    const Series b = random_series(rng, 50, false);
    const Series c = random_series(rng, 50, false);
    CHECK(!first_mismatch(mul(a, b), mul(b, a)));
    CHECK(!first_mismatch(mul(mul(a, b), c), mul(a, mul(b, c))));
    CHECK(!first_mismatch(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
  }
}

TEST_CASE("inverse round-trip on 200 random unit series") {
  std::mt19937 rng(7);
  const long T = 50;
  const Series one = Series::constant(IntCoeffs{}, T, 1);
  for (int rep = 0; rep < 200; ++rep) {
    const Series a = random_series(rng, T, true);
    CHECK(!first_mismatch(mul(a, inverse(a)), one));
  }
}

TEST_CASE("reduced coefficients match exact coefficients") {
  std::mt19937 rng(99);
  const ModCoeffs ring(24);
  for (int rep = 0; rep < 10; ++rep) {
    const Series a = random_series(rng, 40, true);
    const Series b = random_series(rng, 40, false);
    CHECK(!first_mismatch(reduce(mul(a, b), ring),
                          mul(reduce(a, ring), reduce(b, ring))));
    CHECK(!first_mismatch(reduce(inverse(a), ring),
                          inverse(reduce(a, ring))));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(4242);
  const long T = 1500;  // above the parallel cutoff
  const Series a = random_series(rng, T, true);
  const Series b = random_series(rng, T, false);
  const auto terms = eta_factor_terms(3, T);

  std::vector<Int> out_serial(T + 1), out_omp(T + 1);
  kernels::serial::convolve(a.coeffs(), b.coeffs(), out_serial);
  kernels::omp::convolve(a.coeffs(), b.coeffs(), out_omp);
  CHECK(out_serial == out_omp);

  kernels::serial::invert(a.coeffs(), out_serial);
  kernels::omp::invert(a.coeffs(), out_omp);
  CHECK(out_serial == out_omp);

  kernels::serial::sparse_mul(a.coeffs(), terms, out_serial);
  kernels::omp::sparse_mul(a.coeffs(), terms, out_omp);
  CHECK(out_serial == out_omp);

  const ModCoeffs ring(864);
  const ModSeries am = reduce(a, ring), bm = reduce(b, ring);
  std::vector<std::uint64_t> mod_serial(T + 1), mod_omp(T + 1);
  kernels::serial::convolve(ring, am.coeffs(), bm.coeffs(), mod_serial);
  kernels::omp::convolve(ring, am.coeffs(), bm.coeffs(), mod_omp);
  CHECK(mod_serial == mod_omp);

  kernels::serial::invert(ring, am.coeffs(), mod_serial);
  kernels::omp::invert(ring, am.coeffs(), mod_omp);
  CHECK(mod_serial == mod_omp);

  kernels::serial::sparse_mul(ring, am.coeffs(), terms, mod_serial);
  kernels::omp::sparse_mul(ring, am.coeffs(), terms, mod_omp);
  CHECK(mod_serial == mod_omp);
}

TEST_CASE("pow_series") {
  const Series two_terms = from_coeffs({1, 1, 0, 0, 0, 0});
  const Series p = pow_series(two_terms, 5);
  CHECK(p[0] == 1);
  CHECK(p[1] == 5);
  CHECK(p[2] == 10);
  CHECK(p[5] == 1);
  CHECK(pow_series(two_terms, 0)[0] == 1);
}
