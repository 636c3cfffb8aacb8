#include "regover/eta.hpp"

#include <stdexcept>

namespace regover {

EtaQuotientSpec::EtaQuotientSpec(long level, std::vector<long> exps)
    : level_(level), divisors_(divisors(level)), exps_(std::move(exps)) {
  if (exps_.size() != divisors_.size())
    throw std::invalid_argument(
        "EtaQuotientSpec: need one exponent per divisor of the level");
}

EtaQuotientSpec EtaQuotientSpec::from_map(long level,
                                          const std::map<long, long>& exps) {
  const auto divs = divisors(level);
  for (const auto& [d, r] : exps)
    if (d < 1 || level % d != 0)
      throw std::invalid_argument(
          "EtaQuotientSpec: exponent key does not divide the level");
  std::vector<long> dense(divs.size(), 0);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    auto it = exps.find(divs[i]);
    if (it != exps.end()) dense[i] = it->second;
  }
  return EtaQuotientSpec(level, std::move(dense));
}

long EtaQuotientSpec::exponent(long divisor) const {
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i] == divisor) return exps_[i];
  throw std::invalid_argument("EtaQuotientSpec: not a divisor of the level");
}

long EtaQuotientSpec::exponent_sum() const {
  long s = 0;
  for (long r : exps_) s += r;
  return s;
}

long EtaQuotientSpec::weighted_exponent_sum() const {
  long s = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    s += divisors_[i] * exps_[i];
  return s;
}

std::vector<kernels::SparseTerm> eta_factor_terms(long delta, long trunc) {
  if (delta < 1) throw std::invalid_argument("eta_factor_terms: delta < 1");
  std::vector<kernels::SparseTerm> terms;
  terms.push_back({0, 1});
  for (long k = 1;; ++k) {
    const long e1 = delta * (k * (3 * k - 1)) / 2;
    const long e2 = delta * (k * (3 * k + 1)) / 2;
    if (e1 > trunc) break;
    const long sign = (k % 2 == 0) ? 1 : -1;
    terms.push_back({e1, sign});
    if (e2 <= trunc) terms.push_back({e2, sign});
  }
  return terms;
}

}  // namespace regover
