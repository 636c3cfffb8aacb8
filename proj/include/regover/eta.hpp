#pragma once

#include <cstdlib>
#include <map>
#include <vector>

#include "regover/arith.hpp"
#include "regover/kernels.hpp"
#include "regover/series.hpp"

namespace regover {

/// A level M together with one integer exponent r_delta per divisor delta of
/// M (zeros kept): the data of the product  prod_{delta | M} f_delta^{r_delta}
/// with f_d = prod_{i>=1} (1 - q^{d i}).
class EtaQuotientSpec {
 public:
  /// The empty product at level 1.
  EtaQuotientSpec() : level_(1), divisors_{1}, exps_{0} {}

  /// exps[i] is the exponent of the i-th divisor of level, ascending.
  EtaQuotientSpec(long level, std::vector<long> exps);

  /// Build from a sparse divisor -> exponent map; missing divisors get 0.
  static EtaQuotientSpec from_map(long level,
                                  const std::map<long, long>& exps);

  long level() const { return level_; }
  const std::vector<long>& divisor_list() const { return divisors_; }
  const std::vector<long>& exponents() const { return exps_; }

  long exponent(long divisor) const;
  long exponent_sum() const;           // sum r_delta
  long weighted_exponent_sum() const;  // sum delta * r_delta

  bool operator==(const EtaQuotientSpec&) const = default;

 private:
  long level_;
  std::vector<long> divisors_;
  std::vector<long> exps_;
};

/// Sparse coefficients of f_delta through q^trunc (pentagonal-number
/// expansion of the product; all coefficients are +/-1).
std::vector<kernels::SparseTerm> eta_factor_terms(long delta, long trunc);

/// Expand the quotient through q^trunc. Factors with positive exponent are
/// multiplied into one aggregate, factors with negative exponent into
/// another; the negative aggregate is inverted once at the end.
template <class Ring>
BasicSeries<Ring> eta_expand(const Ring& ring, const EtaQuotientSpec& spec,
                             long trunc) {
  BasicSeries<Ring> pos = BasicSeries<Ring>::constant(ring, trunc, 1);
  BasicSeries<Ring> neg = BasicSeries<Ring>::constant(ring, trunc, 1);
  bool has_neg = false;
  for (std::size_t i = 0; i < spec.divisor_list().size(); ++i) {
    const long delta = spec.divisor_list()[i];
    const long r = spec.exponents()[i];
    if (r == 0 || delta > trunc) continue;  // f_delta = 1 + O(q^{trunc+1})
    const auto terms = eta_factor_terms(delta, trunc);
    for (long j = 0; j < std::abs(r); ++j) {
      if (r > 0)
        pos = mul_sparse(pos, terms);
      else {
        neg = mul_sparse(neg, terms);
        has_neg = true;
      }
    }
  }
  if (!has_neg) return pos;
  return mul(pos, inverse(neg));
}

}  // namespace regover
