#include "regover/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "regover/errors.hpp"

namespace regover {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_squarefree(long n) {
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

long tau(long n) {
  long t = 1;
  for (const auto& [p, e] : factorize(n)) t *= e + 1;
  return t;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DivisorStats divisor_stats(long n, long ell, long mu) {
  if (n < 1 || ell < 1 || mu < 1)
    throw std::invalid_argument("divisor_stats: arguments must be positive");
  DivisorStats s;
  s.n = n;
  s.tau = tau(n);
  // m(ell|n) = tau(n/ell) when ell | n, else 0
  s.m_ell = (n % ell == 0) ? tau(n / ell) : 0;
  s.m_mu = (n % mu == 0) ? tau(n / mu) : 0;
  s.m_ellmu = (n % (ell * mu) == 0) ? tau(n / (ell * mu)) : 0;
  s.delta = s.tau - (s.m_ell + s.m_mu - s.m_ellmu);
  return s;
}

long isqrt64(long n) {
  if (n < 0) throw std::invalid_argument("isqrt64: negative argument");
  if (n == 0) return 0;
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(long n) {
  if (n < 0) return false;
  const long r = isqrt64(n);
  return r * r == n;
}

std::set<long> squares_mod(long m) {
  if (m < 1) throw std::invalid_argument("squares_mod: m must be positive");
  if (m == 1) return {0};  // Z_1 has the single residue 0
  std::set<long> out;
  for (long x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1) out.insert((x * x) % m);
  return out;
}

long inv_mod(long a, long m) {
  if (m < 1) throw std::invalid_argument("inv_mod: modulus must be positive");
  if (m == 1) return 0;
  long r = a % m;
  if (r < 0) r += m;
  // extended Euclid on (r, m)
  long old_r = r, cur_r = m;
  long old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const long q = old_r / cur_r;
    std::swap(old_r -= q * cur_r, cur_r);
    std::swap(old_s -= q * cur_s, cur_s);
  }
  if (old_r != 1) throw NotInvertible("inv_mod: gcd(a, m) != 1");
  long inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

bool is_qnr(long a, long p) {
  long r = a % p;
  if (r < 0) r += p;
  if (r == 0) return false;
  for (long x = 1; x < p; ++x)
    if ((x * x) % p == r) return false;
  return true;
}

Int index_gamma0(long N) {
  if (N < 1) throw std::invalid_argument("index_gamma0: N must be positive");
  Rat idx(N);
  for (const auto& [p, e] : factorize(N)) {
    Rat f(p + 1, p);
    f.canonicalize();
    idx *= f;
  }
  if (idx.get_den() != 1)
    throw std::logic_error("index_gamma0: non-integral index");
  return idx.get_num();
}

}  // namespace regover
