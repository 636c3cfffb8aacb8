#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regover/qseries.hpp"
#include "regover/series.hpp"

namespace regover {

/// One arithmetic-progression divisibility claim:
/// u | a(m n + t) for n_min <= n <= bound, a = coefficients of the family.
struct CongruenceClaim {
  FamilyParams family;
  long m = 1;
  long t = 0;
  long modulus = 2;  // "u" in claim files
  long bound = 100;
  long n_min = 0;
  std::string label;

  void validate() const;
  long max_index() const { return m * bound + t; }
  std::string describe() const;
};

struct ClaimResult {
  bool pass = false;
  long fail_n = -1;
  long fail_index = -1;
  std::uint64_t residue = 0;
};

/// Expands the family modulo the claim's u and checks the progression.
ClaimResult verify_claim(const CongruenceClaim& claim);

/// Same check against an already-expanded residue series (its ring modulus
/// must equal the claim's u). Throws TruncationTooSmall.
ClaimResult verify_claim(const ModSeries& series, const CongruenceClaim& claim);

/// Batch verification; claims are independent and fan out across threads,
/// results are returned in input order.
std::vector<ClaimResult> verify_batch(const std::vector<CongruenceClaim>& claims);

/// The built-in claim corpus: the 26 proved progressions, with default
/// bounds of 500 for step m <= 24 and 100 for larger steps.
std::vector<CongruenceClaim> builtin_claims();

// claim-file (de)serialization; format: {"claims": [{family, m, t, u,
// bound?, n_min?, label?}, ...]}
std::vector<CongruenceClaim> claims_from_json(const nlohmann::json& doc);
nlohmann::json claims_to_json(const std::vector<CongruenceClaim>& claims);
nlohmann::json claim_to_json(const CongruenceClaim& claim);
nlohmann::json result_to_json(const CongruenceClaim& claim,
                              const ClaimResult& result);

/// Complete mod-4 classification of Rbar(ell, mu): residue 2 exactly when n
/// has an odd number of representations among k^2, ell k^2, mu k^2,
/// ell mu k^2; the case split records which squareness pattern applies.
struct Mod4Class {
  int case_index = 0;  // 1: ell square only, 2: both squares, 3: neither
  int predicted = 0;   // residue mod 4, in {0, 2}
};

Mod4Class classify_mod4(long ell, long mu, long n);

/// Admissible residues r in 1..p-1 with inv(3,p)*4*r + 1 a quadratic
/// nonresidue mod p; p must be a prime >= 5 (else BadPrime).
std::vector<long> mod8_admissible(long p);

struct Mod8FamilyResult {
  long p = 0;
  long r = 0;
  long bound = 0;
  bool pass = false;
  long fail_n = -1;
  std::uint64_t residue = 0;
};

/// Checks 8 | RbarStar_6(3(pn+r)+2) for n <= bound; r must be admissible
/// (else InadmissibleR).
Mod8FamilyResult verify_mod8_family(long p, long r, long bound);

/// The progression-extracted cube congruence behind the mod-8 family:
/// sum RbarStar_6(3n+2) q^n = 4 f_6^3 (mod 8) through q^trunc, with f_6^3
/// expanded in the extracted variable.
IdentityCheck verify_rstar6_mod8_cube(long trunc);

struct ScanRow {
  long ell = 0;
  long k = 0;
  bool pass = false;
  long fail_n = -1;
  long fail_index = -1;
  std::uint64_t residue = 0;
};

struct ScanReport {
  long ell_max = 0;
  long n_max = 0;
  std::vector<ScanRow> rows;
  bool counterexample_found = false;
};

/// Sweep of the conjectured family 6 | Rbar_{4,9}(4 ell n + 4k) for
/// 2 <= ell <= ell_max, 1 <= k <= ell, n <= n_max. Reports per-progression
/// status only; it never asserts the conjecture itself.
ScanReport scan_conjecture(long ell_max, long n_max);

}  // namespace regover
