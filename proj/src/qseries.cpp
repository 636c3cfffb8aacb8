#include "regover/qseries.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "regover/errors.hpp"

namespace regover {

void FamilyParams::validate() const {
  if (ell < 2) throw std::invalid_argument("family: ell must be >= 2");
  if (kind == FamilyKind::Rbar) {
    if (mu < 2) throw std::invalid_argument("family: mu must be >= 2");
    if (std::gcd(ell, mu) != 1)
      throw std::invalid_argument("family: ell and mu must be coprime");
  }
}

std::string FamilyParams::name() const {
  if (kind == FamilyKind::Rbar)
    return "Rbar(" + std::to_string(ell) + "," + std::to_string(mu) + ")";
  return "RbarStar(" + std::to_string(ell) + ")";
}

EtaQuotientSpec family_eta_spec(const FamilyParams& p) {
  p.validate();
  std::map<long, long> r;
  auto bump = [&r](long d, long e) { r[d] += e; };
  if (p.kind == FamilyKind::Rbar) {
    bump(1, -2);
    bump(2, 1);
    bump(p.ell, 2);
    bump(p.mu, 2);
    bump(2 * p.ell, -1);
    bump(2 * p.mu, -1);
    bump(p.ell * p.mu, -2);
    bump(2 * p.ell * p.mu, 1);
    return EtaQuotientSpec::from_map(2 * p.ell * p.mu, r);
  }
  bump(1, -2);
  bump(2, 1);
  bump(p.ell, 1);
  return EtaQuotientSpec::from_map(std::lcm(2L, p.ell), r);
}

Series theta_phi(ThetaSign sign, long scale, long trunc) {
  if (scale < 1) throw std::invalid_argument("theta_phi: scale must be >= 1");
  Series out = Series::constant(IntCoeffs{}, trunc, 1);
  for (long n = 1; scale * n * n <= trunc; ++n) {
    const bool neg = (sign == ThetaSign::minus) && (n % 2 == 1);
    out.at(scale * n * n) = neg ? -2 : 2;
  }
  return out;
}

namespace {

IdentityCheck compare(const Series& lhs, const Series& rhs, long trunc) {
  IdentityCheck res;
  res.trunc = trunc;
  const auto mm = first_mismatch(lhs, rhs);
  res.pass = !mm.has_value();
  res.first_mismatch = mm.value_or(-1);
  return res;
}

Series eta_q(const std::map<long, long>& exps, long trunc) {
  long level = 1;
  for (const auto& [d, r] : exps) level = std::lcm(level, d);
  return eta_expand(IntCoeffs{}, EtaQuotientSpec::from_map(level, exps),
                    trunc);
}

}  // namespace

IdentityCheck check_identity(const IdentityId& id, long trunc) {
  using Kind = IdentityId::Kind;
  switch (id.kind) {
    case Kind::lemma31: {
      const Series lhs = pow_series(theta_phi(ThetaSign::minus, 2, trunc), 2);
      const Series rhs = mul(theta_phi(ThetaSign::plus, 1, trunc),
                             theta_phi(ThetaSign::minus, 1, trunc));
      return compare(lhs, rhs, trunc);
    }
    case Kind::lemma32: {
      const Series lhs = inverse(theta_phi(ThetaSign::minus, 1, trunc));
      Series rhs = Series::constant(IntCoeffs{}, trunc, 1);
      for (long e = 1; e <= trunc; e *= 2)
        rhs = mul(rhs, pow_series(theta_phi(ThetaSign::plus, e, trunc), e));
      return compare(lhs, rhs, trunc);
    }
    case Kind::sellers_dissection: {
      const Series lhs = eta_q({{1, -2}, {2, 1}}, trunc);
      const Series t0 = eta_q({{3, -8}, {6, 4}, {9, 6}, {18, -3}}, trunc);
      const Series t1 = eta_q({{3, -7}, {6, 3}, {9, 3}}, trunc);
      const Series t2 = eta_q({{3, -6}, {6, 2}, {18, 3}}, trunc);
      const Series rhs = add(
          t0, add(scaled(shifted(t1, 1), Int(2)), scaled(shifted(t2, 2), Int(4))));
      return compare(lhs, rhs, trunc);
    }
    case Kind::iterated_phi: {
      FamilyParams fam{FamilyKind::Rbar, id.ell, id.mu};
      fam.validate();
      const Series lhs = gf_family(fam, trunc);
      const Series num = mul(theta_phi(ThetaSign::minus, id.ell, trunc),
                             theta_phi(ThetaSign::minus, id.mu, trunc));
      const Series den =
          mul(theta_phi(ThetaSign::minus, 1, trunc),
              theta_phi(ThetaSign::minus, id.ell * id.mu, trunc));
      const Series rhs = mul(num, inverse(den));
      return compare(lhs, rhs, trunc);
    }
  }
  throw UnknownIdentity("check_identity: unhandled identity kind");
}

IdentityId parse_identity(const std::string& name, long ell, long mu) {
  using Kind = IdentityId::Kind;
  if (name == "lemma31") return {Kind::lemma31, 0, 0};
  if (name == "lemma32") return {Kind::lemma32, 0, 0};
  if (name == "sellers_dissection") return {Kind::sellers_dissection, 0, 0};
  if (name == "iterated_phi") {
    if (ell < 2 || mu < 2)
      throw UnknownIdentity("iterated_phi requires --l and --mu");
    return {Kind::iterated_phi, ell, mu};
  }
  throw UnknownIdentity("unknown identity: " + name);
}

std::string identity_name(const IdentityId& id) {
  using Kind = IdentityId::Kind;
  switch (id.kind) {
    case Kind::lemma31:
      return "lemma31";
    case Kind::lemma32:
      return "lemma32";
    case Kind::sellers_dissection:
      return "sellers_dissection";
    case Kind::iterated_phi:
      return "iterated_phi(" + std::to_string(id.ell) + "," +
             std::to_string(id.mu) + ")";
  }
  return "?";
}

}  // namespace regover
