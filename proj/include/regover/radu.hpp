#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regover/eta.hpp"
#include "regover/laurent.hpp"
#include "regover/qseries.hpp"
#include "regover/series.hpp"

namespace regover {

/// Input tuple of a Ramanujan-Kolberg certificate: progression step m and
/// residue t, eta exponents (r_delta) over the divisors of M defining the
/// coefficient stream, auxiliary exponents (r'_delta) over the divisors of
/// the group level N. k = gcd(m^2 - 1, 24) is always recomputed.
struct RaduTuple {
  long m = 1;
  long M = 1;
  long N = 1;
  long t = 0;
  EtaQuotientSpec r;
  EtaQuotientSpec rprime;

  long k() const;
  void validate() const;
};

struct ConditionReport {
  int index = 0;
  bool pass = false;
  std::string detail;
};

/// The six admissibility conditions gating the finite verification.
struct DeltaStarReport {
  std::array<ConditionReport, 6> conditions;
  bool all_pass = false;
};

DeltaStarReport check_delta_star(const RaduTuple& tuple);

/// Orbit P(t) of the residue t under the square-class action
/// t' = t s + (s-1)/24 * sum(delta r_delta) mod m, s ranging over squares of
/// units mod 24m. Sorted ascending; always contains t.
std::vector<long> residue_orbit(const RaduTuple& tuple);

/// Order bound p(gamma) at the coset representative [[1,0],[delta,1]]:
/// min over lambda in [0, m) of
/// (1/24) sum_{d | M} r_d gcd(d (1 + k lambda delta), m delta)^2 / (d m).
Rat cusp_order_main(const RaduTuple& tuple, long delta);

/// Auxiliary order bound p'(gamma):
/// (1/24) sum_{d | N} r'_d gcd(d, delta)^2 / d.
Rat cusp_order_aux(const RaduTuple& tuple, long delta);

struct NuBound {
  Rat exact;
  long floor_value = 0;
};

/// The coefficient-check bound: nu = (1/24)((sum r + sum r')[Gamma:Gamma_0(N)]
/// - sum delta r' - (1/m) sum delta r) - t_min/m, with its floor.
NuBound verification_bound(const RaduTuple& tuple, long t_min);

enum class CertFailure {
  none,
  delta_star_failed,
  positivity_failed,
  finite_check_failed,
};

std::string to_string(CertFailure f);

struct CosetEntry {
  long delta = 0;
  Rat order_main;
  Rat order_aux;
  Rat sum;
  bool nonneg = false;
};

struct FiniteCheckReport {
  bool attempted = false;
  bool pass = false;
  long bound = -1;
  long fail_tprime = -1;
  long fail_n = -1;
  long fail_index = -1;
  std::uint64_t residue = 0;
};

struct RaduCertificate {
  RaduTuple tuple;
  long modulus = 0;
  FamilyParams family;
  DeltaStarReport conditions;
  std::vector<long> orbit;
  std::vector<CosetEntry> cosets;
  bool positivity = false;
  Rat nu;
  long floor_nu = 0;
  std::optional<long> stated_floor_nu;
  FiniteCheckReport finite;
  bool overall = false;
  CertFailure failure = CertFailure::none;
};

/// Full certificate evaluation: the condition report, orbit, per-coset
/// positivity, the nu bound, and the finite coefficient check of
/// u | a(m n + t') for every orbit residue up to
/// max(recomputed floor(nu), stated bound). The tuple's eta spec must expand
/// to the family's generating function (checked through q^50); N or N/2 must
/// be square-free for the shipped coset family (else CosetLemmaInapplicable).
RaduCertificate certify(const RaduTuple& tuple, long modulus,
                        const FamilyParams& family,
                        std::optional<long> stated_floor_nu = std::nullopt);

struct CertificateInput {
  RaduTuple tuple;
  long modulus = 0;
  FamilyParams family;
  std::optional<long> stated_floor_nu;
};

/// Certificate file format: {m, M, N, t, r: [...], rprime: [...], u,
/// family: {kind, l, mu}, paper_floor_nu?}.
CertificateInput certificate_input_from_json(const nlohmann::json& doc);
nlohmann::json certificate_to_json(const RaduCertificate& cert);

/// An eta quotient with a monomial shift q^shift in front.
struct ShiftedEta {
  EtaQuotientSpec eta;
  long shift = 0;
};

/// Product-times-progression witness identity
///   prefactor(q) * sum_n a(m n + t) q^n = poly(hauptmodul(q))
/// whose right side carries the claimed common factor.
struct WitnessSpec {
  std::string id;
  FamilyParams family;
  long m = 1;
  long t = 0;
  ShiftedEta prefactor;
  ShiftedEta hauptmodul;
  std::vector<Int> poly;           // coefficients, low to high
  std::vector<std::string> basis;  // only {"1"} is supported
  long common_factor = 1;
};

WitnessSpec builtin_witness(const std::string& id);
std::vector<std::string> builtin_witness_ids();

struct WitnessResult {
  bool pass = false;
  long first_mismatch = 0;  // exponent; meaningful when !pass
  bool rhs_divisible = false;
  long compare_from = 0;
  long compare_to = 0;
};

/// Expands both sides as Laurent series and compares exactly through
/// q^trunc; also checks every right-side coefficient against the common
/// factor.
WitnessResult verify_witness(const WitnessSpec& spec, long trunc);

}  // namespace regover
