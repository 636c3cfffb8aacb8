#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "regover/qseries.hpp"

namespace regover {

/// An overpartition: parts as (size, overlined) with sizes descending and at
/// most one overlined copy per size. Plain partitions have no overlines.
struct Overpartition {
  std::vector<std::pair<long, bool>> parts;
  long weight() const;
};

std::string render(const Overpartition& p);

/// The seven partition classes of the equinumerosity theorem. Rbar and
/// RbarStar count overpartitions; A..F count ordinary partitions under
/// per-size multiplicity rules:
///   A  mu-regular; non-multiples of ell appear 0 or ell times, multiples of
///      ell fewer than ell times                              (weight ell*n)
///   B  (ell,mu)-regular, odd parts with even multiplicity      (weight 2n)
///   C  mu-regular, odd multiplicities in {0,2,...,2(ell-1)}, even parts
///      fewer than ell times; needs ell, mu odd, ell < mu      (weight 2n)
///   D  (ell,2mu)-regular, odd parts even multiplicity, parts = mu mod 2mu
///      at most once; needs mu even                            (weight 2n)
///   E  as C but (2mu)- and (ell mu)-regular with the mod-2mu singleton rule;
///      needs mu even, ell < mu                                (weight 2n)
///   F  (ell^2,mu)-regular; non-multiples of ell appear 0 or ell times
///                                                          (weight ell*n)
enum class PartitionClass { Rbar, RbarStar, A, B, C, D, E, F };

struct ClassSpec {
  PartitionClass cls = PartitionClass::Rbar;
  long ell = 2;
  long mu = 3;

  /// Throws InapplicableClass when the parameters violate the class's
  /// hypotheses (coprimality, parity, ordering).
  void validate() const;
};

std::string class_name(PartitionClass c);

/// Number of overpartitions of n, by direct recursion over part sizes.
std::uint64_t count_overpartitions(long n);

/// Exact count of weight-n members of the class. For A and F the natural
/// argument is ell*n', for B..E it is 2n'; the caller passes the scaled
/// weight. Counts stay within 64 bits for weights <= 250 (enforced).
std::uint64_t count_class(const ClassSpec& spec, long n);

/// Counts for every weight 0..max_weight in one sweep.
std::vector<std::uint64_t> class_counts(const ClassSpec& spec,
                                        long max_weight);

/// Weight multiplier applied to Rbar's index to reach a class's argument
/// (ell for A/F, 2 for B..E, 1 otherwise).
long class_weight_scale(PartitionClass c, long ell);

/// True when the class hypotheses hold for (ell, mu).
bool class_applicable(PartitionClass c, long ell, long mu);

struct SevenWayEntry {
  PartitionClass cls;
  long n;           // Rbar index
  long weight_arg;  // scaled argument handed to the class count
  std::uint64_t class_count;
  std::uint64_t rbar_count;
  bool match;
};

struct SevenWayReport {
  long ell = 0;
  long mu = 0;
  long n_max = 0;
  std::vector<PartitionClass> compared;
  std::vector<std::pair<PartitionClass, std::string>> skipped;
  std::vector<SevenWayEntry> entries;
  bool all_match = false;
  long mismatches = 0;
};

/// Compare every applicable class against Rbar(ell, mu) for n <= n_max.
SevenWayReport verify_seven_way(long ell, long mu, long n_max);

/// Debug-only explicit listing; limited to n <= 30.
std::vector<Overpartition> list_class(const ClassSpec& spec, long n);

}  // namespace regover
