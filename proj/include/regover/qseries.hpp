#pragma once

#include <string>

#include "regover/eta.hpp"
#include "regover/series.hpp"

namespace regover {

/// The two overpartition families the toolkit expands:
///   Rbar(ell, mu)  - overpartitions with no part divisible by ell or mu,
///                    gcd(ell, mu) = 1; generating function
///                    f_2 f_ell^2 f_mu^2 f_{2 ell mu} /
///                    (f_1^2 f_{2 ell} f_{2 mu} f_{ell mu}^2)
///   RbarStar(ell)  - overpartitions whose non-overlined parts are
///                    ell-regular; generating function f_2 f_ell / f_1^2
enum class FamilyKind { Rbar, RbarStar };

struct FamilyParams {
  FamilyKind kind = FamilyKind::Rbar;
  long ell = 2;
  long mu = 3;  // ignored for RbarStar

  void validate() const;
  std::string name() const;
};

/// Eta-quotient data of the family's generating function. Coinciding
/// divisors (e.g. ell = 2 merging f_2 factors) accumulate.
EtaQuotientSpec family_eta_spec(const FamilyParams& p);

template <class Ring>
BasicSeries<Ring> gf_family(const Ring& ring, const FamilyParams& p,
                            long trunc) {
  p.validate();
  return eta_expand(ring, family_eta_spec(p), trunc);
}

inline Series gf_family(const FamilyParams& p, long trunc) {
  return gf_family(IntCoeffs{}, p, trunc);
}

enum class ThetaSign { plus, minus };

/// phi(+/- q^s) = 1 + 2 sum_{n>=1} (+/-1)^n q^{s n^2} through q^trunc.
Series theta_phi(ThetaSign sign, long scale, long trunc);

/// Identity checks: both sides expanded to q^trunc and compared exactly.
///   lemma31             phi(-q^2)^2 = phi(q) phi(-q)
///   lemma32             1/phi(-q) = phi(q) phi(q^2)^2 phi(q^4)^4 ...
///                       (factors with 2^k > trunc are 1 + O(q^{trunc+1}))
///   sellers_dissection  f_2/f_1^2 = f_6^4 f_9^6/(f_3^8 f_18^3)
///                       + 2q f_6^3 f_9^3/f_3^7 + 4q^2 f_6^2 f_18^3/f_3^6
///   iterated_phi        gf Rbar(ell,mu) = phi(-q^ell) phi(-q^mu)
///                       / (phi(-q) phi(-q^{ell mu}))
struct IdentityId {
  enum class Kind { lemma31, lemma32, sellers_dissection, iterated_phi };
  Kind kind = Kind::lemma31;
  long ell = 0;  // iterated_phi only
  long mu = 0;
};

struct IdentityCheck {
  bool pass = false;
  long first_mismatch = -1;  // exponent of the first differing coefficient
  long trunc = 0;
};

IdentityCheck check_identity(const IdentityId& id, long trunc);

/// Parse an identity name as used on the command line; throws
/// UnknownIdentity. iterated_phi takes its (ell, mu) from the extra args.
IdentityId parse_identity(const std::string& name, long ell = 0, long mu = 0);
std::string identity_name(const IdentityId& id);

}  // namespace regover
