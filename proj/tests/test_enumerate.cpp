#include <doctest.h>

#include <algorithm>

#include "regover/enumerate.hpp"

using namespace regover;

TEST_CASE("overpartition counts") {
  CHECK(count_overpartitions(0) == 1);
  CHECK(count_overpartitions(1) == 2);
  CHECK(count_overpartitions(2) == 4);
  CHECK(count_overpartitions(3) == 8);
  CHECK(count_overpartitions(4) == 14);
  CHECK(count_overpartitions(5) == 24);
}

TEST_CASE("class counts, small cases") {
  CHECK(count_class({PartitionClass::Rbar, 2, 3}, 5) == 4);
  CHECK(count_class({PartitionClass::Rbar, 2, 3}, 0) == 1);
  // weight 2 members of class A for (2,3): (2) and (1,1)
  CHECK(count_class({PartitionClass::A, 2, 3}, 2) == 2);
  CHECK(count_class({PartitionClass::B, 3, 5}, 0) == 1);
  // non-overlined parts 6-regular: (2), (2~), (1,1), (1~,1)
  CHECK(count_class({PartitionClass::RbarStar, 6, 0}, 2) == 4);
}

TEST_CASE("class applicability") {
  CHECK_THROWS_AS(count_class({PartitionClass::B, 3, 4}, 4),
                  InapplicableClass);
  CHECK_THROWS_AS(count_class({PartitionClass::C, 5, 3}, 4),
                  InapplicableClass);
  CHECK_THROWS_AS(count_class({PartitionClass::D, 3, 5}, 4),
                  InapplicableClass);
  CHECK_THROWS_AS(count_class({PartitionClass::E, 5, 4}, 4),
                  InapplicableClass);
  CHECK_THROWS_AS(count_class({PartitionClass::Rbar, 2, 4}, 4),
                  InapplicableClass);
  CHECK(class_applicable(PartitionClass::B, 3, 5));
  CHECK(!class_applicable(PartitionClass::C, 5, 3));
  CHECK(class_applicable(PartitionClass::D, 3, 2));
  CHECK(!class_applicable(PartitionClass::E, 3, 2));
}

TEST_CASE("seven-way comparison") {
  SUBCASE("(3,5): A, B, C, F compared, zero mismatches") {
    const auto rep = verify_seven_way(3, 5, 20);
    CHECK(rep.all_match);
    CHECK(rep.compared == std::vector<PartitionClass>{
                              PartitionClass::A, PartitionClass::B,
                              PartitionClass::C, PartitionClass::F});
    CHECK(rep.skipped.size() == 2);  // D, E
  }
  SUBCASE("(3,4): A, D, E, F compared, zero mismatches") {
    const auto rep = verify_seven_way(3, 4, 20);
    CHECK(rep.all_match);
    CHECK(rep.compared == std::vector<PartitionClass>{
                              PartitionClass::A, PartitionClass::D,
                              PartitionClass::E, PartitionClass::F});
  }
  SUBCASE("(2,3): n = 0 counts are all 1") {
    const auto rep = verify_seven_way(2, 3, 0);
    CHECK(rep.all_match);
    for (const auto& e : rep.entries) {
      CHECK(e.class_count == 1);
      CHECK(e.rbar_count == 1);
    }
  }
}

TEST_CASE("Rbar counts are even for n >= 1") {
  const std::pair<long, long> pairs[] = {{2, 3}, {3, 4}, {3, 5}, {4, 9}};
  for (const auto& [l, m] : pairs) {
    const auto counts = class_counts({PartitionClass::Rbar, l, m}, 40);
    for (long n = 1; n <= 40; ++n) CHECK(counts[n] % 2 == 0);
  }
}

TEST_CASE("explicit listing") {
  const auto members = list_class({PartitionClass::Rbar, 2, 3}, 5);
  CHECK(members.size() == 4);
  for (const auto& p : members) CHECK(p.weight() == 5);
  // the four overpartitions of 5 avoiding multiples of 2 and 3
  std::vector<std::string> rendered;
  for (const auto& p : members) rendered.push_back(render(p));
  std::sort(rendered.begin(), rendered.end());
  const std::vector<std::string> expected = {
      "(1,1,1,1,1)", "(1~,1,1,1,1)", "(5)", "(5~)"};
  CHECK(rendered == expected);

  CHECK(list_class({PartitionClass::Rbar, 2, 3}, 0).size() == 1);
  CHECK_THROWS_AS(list_class({PartitionClass::Rbar, 2, 3}, 31),
                  EnumerationRange);
}

TEST_CASE("listing respects the single-overline rule") {
  for (const auto& p : list_class({PartitionClass::RbarStar, 3, 0}, 6)) {
    long overlined_at_size[7] = {0};
    for (const auto& [size, over] : p.parts)
      if (over) ++overlined_at_size[size];
    for (long s = 1; s <= 6; ++s) CHECK(overlined_at_size[s] <= 1);
  }
}

TEST_CASE("enumeration range guard") {
  CHECK_THROWS_AS(count_overpartitions(251), EnumerationRange);
  CHECK_THROWS_AS(class_counts({PartitionClass::Rbar, 2, 3}, 251),
                  EnumerationRange);
}

namespace {

// independent oracle: the class generating function assembled from per-size
// factors taken straight from the class definitions
Series class_gf(const ClassSpec& spec, long trunc) {
  const long ell = spec.ell, mu = spec.mu;
  Series acc = Series::constant(IntCoeffs{}, trunc, 1);
  for (long s = 1; s <= trunc; ++s) {
    Series factor(IntCoeffs{}, trunc);
    factor.at(0) = 1;
    auto geometric = [&](long step) {  // 1/(1 - q^{step s})
      for (long e = step * s; e <= trunc; e += step * s) factor.at(e) = 1;
    };
    auto finite_sum = [&](long step, long top) {  // 1 + q^{step s} + ...
      for (long m = step; m <= top; m += step)
        if (m * s <= trunc) factor.at(m * s) = 1;
    };
    switch (spec.cls) {
      case PartitionClass::Rbar:
        if (s % ell == 0 || s % mu == 0) continue;
        geometric(1);  // (1 + q^s)/(1 - q^s)
        for (long e = s; e <= trunc; e += s) factor.at(e) = 2;
        break;
      case PartitionClass::RbarStar:
        if (s % ell == 0) {
          factor.at(s) = 1;  // a single (overlined) copy
        } else {
          geometric(1);
          for (long e = s; e <= trunc; e += s) factor.at(e) = 2;
        }
        break;
      case PartitionClass::A:
        if (s % mu == 0) continue;
        if (s % ell == 0)
          finite_sum(1, ell - 1);
        else
          finite_sum(ell, ell);
        break;
      case PartitionClass::B:
        if (s % ell == 0 || s % mu == 0) continue;
        geometric(s % 2 == 1 ? 2 : 1);
        break;
      case PartitionClass::C:
        if (s % mu == 0) continue;
        if (s % 2 == 1)
          finite_sum(2, 2 * (ell - 1));
        else
          finite_sum(1, ell - 1);
        break;
      case PartitionClass::D:
        if (s % ell == 0 || s % (2 * mu) == 0) continue;
        if (s % 2 == 1)
          geometric(2);
        else if (s % (2 * mu) == mu)
          finite_sum(1, 1);
        else
          geometric(1);
        break;
      case PartitionClass::E:
        if (s % (2 * mu) == 0 || s % (ell * mu) == 0) continue;
        if (s % 2 == 1)
          finite_sum(2, 2 * (ell - 1));
        else if (s % (2 * mu) == mu)
          finite_sum(1, 1);
        else
          finite_sum(1, ell - 1);
        break;
      case PartitionClass::F:
        if (s % (ell * ell) == 0 || s % mu == 0) continue;
        if (s % ell != 0)
          finite_sum(ell, ell);
        else
          geometric(1);
        break;
    }
    acc = mul(acc, factor);
  }
  return acc;
}

}  // namespace

TEST_CASE("every class matches its product-form generating function") {
  const long nmax = 25;
  const std::pair<long, long> pairs[] = {{2, 3}, {3, 5}, {3, 4}, {5, 4}};
  for (const auto& [l, m] : pairs) {
    for (PartitionClass c :
         {PartitionClass::Rbar, PartitionClass::A, PartitionClass::B,
          PartitionClass::C, PartitionClass::D, PartitionClass::E,
          PartitionClass::F}) {
      if (!class_applicable(c, l, m)) continue;
      const ClassSpec spec{c, l, m};
      const auto counts = class_counts(spec, nmax);
      const Series gf = class_gf(spec, nmax);
      for (long n = 0; n <= nmax; ++n) {
        INFO(class_name(c), "(", l, ",", m, ") at n = ", n);
        REQUIRE(gf[n] == Int(static_cast<unsigned long>(counts[n])));
      }
    }
  }
  for (long l : {3L, 6L}) {
    const ClassSpec spec{PartitionClass::RbarStar, l, 0};
    const auto counts = class_counts(spec, nmax);
    const Series gf = class_gf(spec, nmax);
    for (long n = 0; n <= nmax; ++n)
      REQUIRE(gf[n] == Int(static_cast<unsigned long>(counts[n])));
  }
}
