#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "regover/rings.hpp"

namespace regover {

/* Divisor counts entering the mod-4 classification: tau(n), the number of
 * multiples of ell (resp. mu, ell*mu) dividing n, and the combination
 * delta = tau - (m_ell + m_mu - m_ellmu). */
struct DivisorStats {
  long n = 0;
  long tau = 0;
  long m_ell = 0;
  long m_mu = 0;
  long m_ellmu = 0;
  long delta = 0;
};

DivisorStats divisor_stats(long n, long ell, long mu);

long tau(long n);
std::vector<long> divisors(long n);
std::vector<std::pair<long, int>> factorize(long n);
bool is_prime(long n);
bool is_squarefree(long n);

long isqrt64(long n);
bool is_square(long n);

/// { x^2 mod m : gcd(x, m) = 1 }; m = 1 degenerates to {0}.
std::set<long> squares_mod(long m);

/// Inverse of a modulo m, in (0, m). Throws NotInvertible.
long inv_mod(long a, long m);

/// Quadratic nonresidue test modulo an odd prime p. Multiples of p are
/// neither residues nor nonresidues and return false.
bool is_qnr(long a, long p);

/// Index [Gamma : Gamma_0(N)] = N * prod_{p | N} (1 + 1/p), evaluated with
/// exact rationals and checked integral.
Int index_gamma0(long N);

}  // namespace regover
