#include <doctest.h>

#include <fstream>
#include <set>

#include "regover/arith.hpp"
#include "regover/congruence.hpp"

using namespace regover;

TEST_CASE("verify_claim pass and fail") {
  CongruenceClaim c;
  c.family = {FamilyKind::Rbar, 2, 3};
  c.m = 9;
  c.t = 6;
  c.modulus = 6;
  c.bound = 60;
  CHECK(verify_claim(c).pass);

  // same progression mod 7 fails immediately: a(6) = 6
  c.modulus = 7;
  const ClaimResult r = verify_claim(c);
  CHECK(!r.pass);
  CHECK(r.fail_n == 0);
  CHECK(r.fail_index == 6);
  CHECK(r.residue == 6);
}

TEST_CASE("parity claim with n_min") {
  CongruenceClaim c;
  c.family = {FamilyKind::Rbar, 2, 3};
  c.m = 1;
  c.t = 0;
  c.modulus = 2;
  c.bound = 100;
  c.n_min = 1;  // a(0) = 1 is excluded
  CHECK(verify_claim(c).pass);
  c.n_min = 0;
  const ClaimResult r = verify_claim(c);
  CHECK(!r.pass);
  CHECK(r.fail_n == 0);
}

TEST_CASE("verify_claim against a shared series") {
  CongruenceClaim c;
  c.family = {FamilyKind::Rbar, 2, 3};
  c.m = 9;
  c.t = 6;
  c.modulus = 6;
  c.bound = 20;
  const ModCoeffs ring(6);
  const ModSeries series = gf_family(ring, c.family, c.max_index());
  CHECK(verify_claim(series, c).pass);

  const ModSeries shorter = gf_family(ring, c.family, c.max_index() - 1);
  CHECK_THROWS_AS(verify_claim(shorter, c), TruncationTooSmall);
  const ModSeries wrong_mod = gf_family(ModCoeffs(5), c.family, c.max_index());
  CHECK_THROWS_AS(verify_claim(wrong_mod, c), std::invalid_argument);
}

TEST_CASE("builtin corpus") {
  const auto claims = builtin_claims();
  REQUIRE(claims.size() == 26);
  // moduli exactly as published
  std::multiset<long> moduli;
  for (const auto& c : claims) moduli.insert(c.modulus);
  CHECK(moduli.count(6) == 4);
  CHECK(moduli.count(864) == 1);
  CHECK(moduli.count(64) == 1);
  // spot-check the large-step bound rule
  for (const auto& c : claims) CHECK(c.bound == (c.m <= 24 ? 500 : 100));
}

TEST_CASE("builtin corpus verifies at a small bound") {
  auto claims = builtin_claims();
  for (auto& c : claims) c.bound = 40;
  const auto results = verify_batch(claims);
  for (std::size_t i = 0; i < claims.size(); ++i) {
    INFO(claims[i].label);
    CHECK(results[i].pass);
  }
}

TEST_CASE("claims file round trip") {
  std::ifstream in(REGOVER_DATA_DIR "/claims_builtin.json");
  REQUIRE(in.good());
  const auto doc = nlohmann::json::parse(in);
  const auto from_file = claims_from_json(doc);
  const auto builtin = builtin_claims();
  REQUIRE(from_file.size() == builtin.size());
  for (std::size_t i = 0; i < builtin.size(); ++i) {
    CHECK(from_file[i].family.kind == builtin[i].family.kind);
    CHECK(from_file[i].family.ell == builtin[i].family.ell);
    if (builtin[i].family.kind == FamilyKind::Rbar)
      CHECK(from_file[i].family.mu == builtin[i].family.mu);
    CHECK(from_file[i].m == builtin[i].m);
    CHECK(from_file[i].t == builtin[i].t);
    CHECK(from_file[i].modulus == builtin[i].modulus);
    CHECK(from_file[i].bound == builtin[i].bound);
  }
  // serialization parses back
  const auto again = claims_from_json(claims_to_json(builtin));
  CHECK(again.size() == builtin.size());
}

TEST_CASE("malformed claims are rejected") {
  const auto doc = nlohmann::json::parse(R"({"claims": [{"m": 9}]})");
  CHECK_THROWS(claims_from_json(doc));
  const auto bad_kind = nlohmann::json::parse(
      R"({"claims": [{"family": {"kind": "Nope", "l": 2, "mu": 3},
          "m": 9, "t": 6, "u": 6}]})");
  CHECK_THROWS(claims_from_json(bad_kind));
}

TEST_CASE("classify_mod4 examples") {
  CHECK(classify_mod4(4, 3, 1).predicted == 2);
  CHECK(classify_mod4(4, 3, 1).case_index == 1);
  CHECK(classify_mod4(4, 3, 4).predicted == 0);
  CHECK(classify_mod4(2, 3, 6).predicted == 2);  // 6 = (2*3) * 1^2
  CHECK(classify_mod4(2, 3, 6).case_index == 3);
  CHECK(classify_mod4(4, 9, 1).case_index == 2);
  CHECK(classify_mod4(4, 9, 1).predicted == 2);
  CHECK(classify_mod4(4, 9, 4).predicted == 0);  // 4 = 2^2 but 2 | 2
  // 12 = 3*2^2 is also 12*1^2: two representations cancel mod 4
  CHECK(classify_mod4(4, 3, 12).predicted == 0);
}

TEST_CASE("classify_mod4 matches series residues and divisor parity") {
  const std::pair<long, long> pairs[] = {{4, 3}, {4, 9}, {2, 3}, {3, 5}};
  const long nmax = 200;
  for (const auto& [l, m] : pairs) {
    const ModSeries series =
        gf_family(ModCoeffs(4), {FamilyKind::Rbar, l, m}, nmax);
    for (long n = 1; n <= nmax; ++n) {
      const Mod4Class cls = classify_mod4(l, m, n);
      REQUIRE(static_cast<long>(series[n]) == cls.predicted);
      const DivisorStats ds = divisor_stats(n, l, m);
      REQUIRE((ds.delta % 2 != 0 ? 2 : 0) == cls.predicted);
    }
  }
}

TEST_CASE("mod8 admissible residues") {
  CHECK(mod8_admissible(5) == std::vector<long>{2, 4});
  CHECK(mod8_admissible(7) == std::vector<long>{2, 3, 5});
  CHECK(mod8_admissible(11) == std::vector<long>{1, 4, 8, 9, 10});
  CHECK_THROWS_AS(mod8_admissible(4), BadPrime);
  CHECK_THROWS_AS(mod8_admissible(3), BadPrime);
  CHECK_THROWS_AS(mod8_admissible(9), BadPrime);
}

TEST_CASE("mod8 family verification") {
  CHECK(verify_mod8_family(5, 2, 40).pass);
  CHECK(verify_mod8_family(5, 4, 40).pass);
  CHECK_THROWS_AS(verify_mod8_family(5, 1, 40), InadmissibleR);
  CHECK_THROWS_AS(verify_mod8_family(5, 3, 40), InadmissibleR);
}

TEST_CASE("extracted progression matches 4 f_6^3 mod 8") {
  const IdentityCheck res = verify_rstar6_mod8_cube(60);
  CHECK(res.pass);
}

TEST_CASE("conjecture scan") {
  const ScanReport rep = scan_conjecture(5, 20);
  CHECK(rep.rows.size() == 2 + 3 + 4 + 5);
  for (const auto& row : rep.rows) CHECK(row.pass);

  // l_max = 2 covers the two progressions (2,1) and (2,2)
  const ScanReport tiny = scan_conjecture(2, 10);
  CHECK(tiny.rows.size() == 2);
  CHECK(!tiny.counterexample_found);
}
