#include "regover/congruence.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include "regover/arith.hpp"
#include "regover/errors.hpp"

namespace regover {

void CongruenceClaim::validate() const {
  family.validate();
  if (m < 1 || t < 0 || t >= m)
    throw std::invalid_argument("claim: need 0 <= t < m");
  if (modulus < 2) throw std::invalid_argument("claim: modulus must be >= 2");
  if (bound < 0 || n_min < 0 || n_min > bound)
    throw std::invalid_argument("claim: need 0 <= n_min <= bound");
}

std::string CongruenceClaim::describe() const {
  std::string s = family.name() + ": a(" + std::to_string(m) + "n+" +
                  std::to_string(t) + ") = 0 (mod " + std::to_string(modulus) +
                  "), n <= " + std::to_string(bound);
  if (n_min > 0) s += ", n >= " + std::to_string(n_min);
  return s;
}

ClaimResult verify_claim(const ModSeries& series,
                         const CongruenceClaim& claim) {
  claim.validate();
  if (series.ring().modulus() != static_cast<std::uint64_t>(claim.modulus))
    throw std::invalid_argument("verify_claim: series modulus mismatch");
  if (series.trunc() < claim.max_index())
    throw TruncationTooSmall("verify_claim: series shorter than m*bound+t");
  ClaimResult res;
  for (long n = claim.n_min; n <= claim.bound; ++n) {
    const long idx = claim.m * n + claim.t;
    if (series[idx] != 0) {
      res.pass = false;
      res.fail_n = n;
      res.fail_index = idx;
      res.residue = series[idx];
      return res;
    }
  }
  res.pass = true;
  return res;
}

ClaimResult verify_claim(const CongruenceClaim& claim) {
  claim.validate();
  const ModCoeffs ring(static_cast<std::uint64_t>(claim.modulus));
  const ModSeries series = gf_family(ring, claim.family, claim.max_index());
  return verify_claim(series, claim);
}

std::vector<ClaimResult> verify_batch(
    const std::vector<CongruenceClaim>& claims) {
  for (const auto& c : claims) c.validate();
  std::vector<ClaimResult> results(claims.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(claims.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) results[i] = verify_claim(claims[i]);
  return results;
}

namespace {

long default_bound(long m) { return m <= 24 ? 500 : 100; }

CongruenceClaim make_claim(FamilyKind kind, long ell, long mu, long m, long t,
                           long u) {
  CongruenceClaim c;
  c.family = {kind, ell, mu};
  c.m = m;
  c.t = t;
  c.modulus = u;
  c.bound = default_bound(m);
  c.label = c.family.name() + " " + std::to_string(m) + "n+" +
            std::to_string(t) + " mod " + std::to_string(u);
  return c;
}

}  // namespace

std::vector<CongruenceClaim> builtin_claims() {
  using enum FamilyKind;
  return {
      make_claim(Rbar, 2, 3, 9, 6, 6),
      make_claim(Rbar, 4, 3, 6, 3, 6),
      make_claim(Rbar, 4, 3, 6, 5, 12),
      make_claim(Rbar, 4, 3, 9, 3, 6),
      make_claim(Rbar, 4, 3, 12, 7, 24),
      make_claim(Rbar, 4, 3, 12, 11, 72),
      make_claim(Rbar, 4, 9, 8, 4, 12),
      make_claim(Rbar, 4, 9, 12, 4, 12),
      make_claim(Rbar, 4, 9, 12, 8, 72),
      make_claim(Rbar, 4, 9, 16, 8, 24),
      make_claim(Rbar, 4, 9, 18, 12, 96),
      make_claim(Rbar, 4, 9, 24, 20, 216),
      make_claim(Rbar, 4, 9, 18, 15, 48),
      make_claim(Rbar, 4, 9, 96, 80, 864),
      make_claim(Rbar, 8, 27, 36, 15, 24),
      make_claim(Rbar, 8, 27, 36, 21, 96),
      make_claim(Rbar, 8, 27, 36, 24, 12),
      make_claim(Rbar, 8, 27, 36, 27, 6),
      make_claim(Rbar, 16, 81, 36, 33, 48),
      make_claim(Rbar, 16, 81, 72, 60, 48),
      make_claim(RbarStar, 3, 0, 9, 4, 12),
      make_claim(RbarStar, 3, 0, 9, 7, 48),
      make_claim(RbarStar, 6, 0, 9, 5, 24),
      make_claim(RbarStar, 6, 0, 9, 8, 96),
      make_claim(RbarStar, 6, 0, 27, 11, 64),
      make_claim(RbarStar, 6, 0, 81, 47, 24),
  };
}

//----------------------------------------------------------------------------
// claim-file (de)serialization
//----------------------------------------------------------------------------

namespace {

FamilyParams family_from_json(const nlohmann::json& j) {
  FamilyParams f;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Rbar")
    f.kind = FamilyKind::Rbar;
  else if (kind == "RbarStar")
    f.kind = FamilyKind::RbarStar;
  else
    throw std::invalid_argument("claim file: unknown family kind " + kind);
  f.ell = j.at("l").get<long>();
  f.mu = j.value("mu", 0L);
  f.validate();
  return f;
}

nlohmann::json family_to_json(const FamilyParams& f) {
  nlohmann::json j;
  j["kind"] = f.kind == FamilyKind::Rbar ? "Rbar" : "RbarStar";
  j["l"] = f.ell;
  if (f.kind == FamilyKind::Rbar) j["mu"] = f.mu;
  return j;
}

}  // namespace

std::vector<CongruenceClaim> claims_from_json(const nlohmann::json& doc) {
  std::vector<CongruenceClaim> out;
  for (const auto& j : doc.at("claims")) {
    CongruenceClaim c;
    c.family = family_from_json(j.at("family"));
    c.m = j.at("m").get<long>();
    c.t = j.at("t").get<long>();
    c.modulus = j.at("u").get<long>();
    c.bound = j.value("bound", default_bound(c.m));
    c.n_min = j.value("n_min", 0L);
    c.label = j.value("label", std::string{});
    if (c.label.empty())
      c.label = c.family.name() + " " + std::to_string(c.m) + "n+" +
                std::to_string(c.t) + " mod " + std::to_string(c.modulus);
    c.validate();
    out.push_back(std::move(c));
  }
  return out;
}

nlohmann::json claim_to_json(const CongruenceClaim& c) {
  nlohmann::json j;
  j["family"] = family_to_json(c.family);
  j["m"] = c.m;
  j["t"] = c.t;
  j["u"] = c.modulus;
  j["bound"] = c.bound;
  if (c.n_min > 0) j["n_min"] = c.n_min;
  j["label"] = c.label;
  return j;
}

nlohmann::json claims_to_json(const std::vector<CongruenceClaim>& claims) {
  nlohmann::json doc;
  doc["claims"] = nlohmann::json::array();
  for (const auto& c : claims) doc["claims"].push_back(claim_to_json(c));
  return doc;
}

nlohmann::json result_to_json(const CongruenceClaim& claim,
                              const ClaimResult& r) {
  nlohmann::json j;
  j["claim"] = claim_to_json(claim);
  j["status"] = r.pass ? "pass" : "fail";
  if (!r.pass) {
    j["counterexample"] = {
        {"n", r.fail_n}, {"index", r.fail_index}, {"residue", r.residue}};
  }
  return j;
}

//----------------------------------------------------------------------------
// mod-4 classification
//----------------------------------------------------------------------------

Mod4Class classify_mod4(long ell, long mu, long n) {
  if (n < 1) throw std::invalid_argument("classify_mod4: n must be >= 1");
  FamilyParams{FamilyKind::Rbar, ell, mu}.validate();
  Mod4Class out;
  const bool ls = is_square(ell), ms = is_square(mu);
  out.case_index = ls && ms ? 2 : (ls || ms ? 1 : 3);
  int reps = 0;
  for (long f : {1L, ell, mu, ell * mu})
    if (n % f == 0 && is_square(n / f)) ++reps;
  out.predicted = (reps % 2 == 1) ? 2 : 0;
  return out;
}

//----------------------------------------------------------------------------
// mod-8 family
//----------------------------------------------------------------------------

std::vector<long> mod8_admissible(long p) {
  if (p < 5 || !is_prime(p))
    throw BadPrime("mod8_admissible: p must be a prime >= 5");
  const long inv3 = inv_mod(3, p);
  std::vector<long> out;
  for (long r = 1; r < p; ++r)
    if (is_qnr((inv3 * 4 % p) * r + 1, p)) out.push_back(r);
  return out;
}

Mod8FamilyResult verify_mod8_family(long p, long r, long bound) {
  const auto adm = mod8_admissible(p);
  if (std::find(adm.begin(), adm.end(), r) == adm.end())
    throw InadmissibleR("verify_mod8_family: inv(3,p)*4*r+1 is not a "
                        "quadratic nonresidue mod p");
  Mod8FamilyResult res;
  res.p = p;
  res.r = r;
  res.bound = bound;
  const ModCoeffs ring(8);
  const long top = 3 * (p * bound + r) + 2;
  const ModSeries series =
      gf_family(ring, {FamilyKind::RbarStar, 6, 0}, top);
  for (long n = 0; n <= bound; ++n) {
    const long idx = 3 * (p * n + r) + 2;
    if (series[idx] != 0) {
      res.pass = false;
      res.fail_n = n;
      res.residue = series[idx];
      return res;
    }
  }
  res.pass = true;
  return res;
}

IdentityCheck verify_rstar6_mod8_cube(long trunc) {
  const ModCoeffs ring(8);
  const ModSeries big =
      gf_family(ring, {FamilyKind::RbarStar, 6, 0}, 3 * trunc + 2);
  const ModSeries lhs = extract_ap(big, 3, 2);
  // 4 f_6^3 in the extracted variable
  const ModSeries cube =
      eta_expand(ring, EtaQuotientSpec::from_map(6, {{6, 3}}), trunc);
  const ModSeries rhs = scaled(cube, ring.from_long(4));
  IdentityCheck res;
  res.trunc = trunc;
  const auto mm = first_mismatch(lhs, rhs);
  res.pass = !mm.has_value();
  res.first_mismatch = mm.value_or(-1);
  return res;
}

//----------------------------------------------------------------------------
// conjecture scan
//----------------------------------------------------------------------------

ScanReport scan_conjecture(long ell_max, long n_max) {
  if (ell_max < 2)
    throw std::invalid_argument("scan_conjecture: ell_max must be >= 2");
  if (n_max < 0)
    throw std::invalid_argument("scan_conjecture: n_max must be >= 0");
  ScanReport rep;
  rep.ell_max = ell_max;
  rep.n_max = n_max;
  const ModCoeffs ring(6);
  const long top = 4 * ell_max * n_max + 4 * ell_max;
  const ModSeries series = gf_family(ring, {FamilyKind::Rbar, 4, 9}, top);
  for (long ell = 2; ell <= ell_max; ++ell) {
    for (long k = 1; k <= ell; ++k) {
      ScanRow row;
      row.ell = ell;
      row.k = k;
      row.pass = true;
      for (long n = 0; n <= n_max; ++n) {
        const long idx = 4 * ell * n + 4 * k;
        if (series[idx] != 0) {
          row.pass = false;
          row.fail_n = n;
          row.fail_index = idx;
          row.residue = series[idx];
          rep.counterexample_found = true;
          break;
        }
      }
      rep.rows.push_back(row);
    }
  }
  return rep;
}

}  // namespace regover
