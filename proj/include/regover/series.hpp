#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regover/errors.hpp"
#include "regover/kernels.hpp"
#include "regover/rings.hpp"

namespace regover {

/// Truncated formal power series sum_{n=0..T} c_n q^n over a coefficient
/// ring. Values are immutable in practice: every operation returns a fresh
/// series, and binary operations truncate the result to the smaller of the
/// two operand orders. Series = exact integer coefficients,
/// ModSeries = residues modulo a fixed u.
template <class Ring>
class BasicSeries {
 public:
  using Coeff = typename Ring::Coeff;

  /// Zero series through q^trunc.
  BasicSeries(Ring ring, long trunc)
      : ring_(std::move(ring)), c_(static_cast<std::size_t>(trunc) + 1) {
    if (trunc < 0) throw std::invalid_argument("series truncation < 0");
  }

  static BasicSeries constant(Ring ring, long trunc, long value) {
    BasicSeries s(std::move(ring), trunc);
    s.c_[0] = s.ring_.from_long(value);
    return s;
  }

  long trunc() const { return static_cast<long>(c_.size()) - 1; }
  const Ring& ring() const { return ring_; }

  const Coeff& operator[](long n) const {
    return c_[static_cast<std::size_t>(n)];
  }
  Coeff& at(long n) { return c_[static_cast<std::size_t>(n)]; }

  std::span<const Coeff> coeffs() const { return c_; }
  std::span<Coeff> coeffs() { return c_; }

 private:
  Ring ring_;
  std::vector<Coeff> c_;
};

using Series = BasicSeries<IntCoeffs>;
using ModSeries = BasicSeries<ModCoeffs>;

namespace detail {

inline void conv(const IntCoeffs&, std::span<const Int> a,
                 std::span<const Int> b, std::span<Int> out) {
  kernels::convolve(a, b, out);
}
inline void conv(const ModCoeffs& r, std::span<const std::uint64_t> a,
                 std::span<const std::uint64_t> b,
                 std::span<std::uint64_t> out) {
  kernels::convolve(r, a, b, out);
}
inline void inv(const IntCoeffs&, std::span<const Int> a, std::span<Int> out) {
  kernels::invert(a, out);
}
inline void inv(const ModCoeffs& r, std::span<const std::uint64_t> a,
                std::span<std::uint64_t> out) {
  kernels::invert(r, a, out);
}
inline void sparse(const IntCoeffs&, std::span<const Int> a,
                   std::span<const kernels::SparseTerm> t, std::span<Int> out) {
  kernels::sparse_mul(a, t, out);
}
inline void sparse(const ModCoeffs& r, std::span<const std::uint64_t> a,
                   std::span<const kernels::SparseTerm> t,
                   std::span<std::uint64_t> out) {
  kernels::sparse_mul(r, a, t, out);
}

template <class Ring>
void require_same_ring(const BasicSeries<Ring>& a, const BasicSeries<Ring>& b) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument("series over different coefficient rings");
}

}  // namespace detail

template <class Ring>
BasicSeries<Ring> add(const BasicSeries<Ring>& a, const BasicSeries<Ring>& b) {
  detail::require_same_ring(a, b);
  BasicSeries<Ring> out(a.ring(), std::min(a.trunc(), b.trunc()));
  for (long n = 0; n <= out.trunc(); ++n)
    out.at(n) = a.ring().add(a[n], b[n]);
  return out;
}

template <class Ring>
BasicSeries<Ring> sub(const BasicSeries<Ring>& a, const BasicSeries<Ring>& b) {
  detail::require_same_ring(a, b);
  BasicSeries<Ring> out(a.ring(), std::min(a.trunc(), b.trunc()));
  for (long n = 0; n <= out.trunc(); ++n)
    out.at(n) = a.ring().sub(a[n], b[n]);
  return out;
}

/// Full product; the result carries the smaller truncation order.
template <class Ring>
BasicSeries<Ring> mul(const BasicSeries<Ring>& a, const BasicSeries<Ring>& b) {
  detail::require_same_ring(a, b);
  BasicSeries<Ring> out(a.ring(), std::min(a.trunc(), b.trunc()));
  detail::conv(a.ring(), a.coeffs(), b.coeffs(), out.coeffs());
  return out;
}

/// Multiplication by a sparse series given as exponent/coefficient terms
/// (ascending exponents, constant term included).
template <class Ring>
BasicSeries<Ring> mul_sparse(const BasicSeries<Ring>& a,
                             std::span<const kernels::SparseTerm> terms) {
  BasicSeries<Ring> out(a.ring(), a.trunc());
  detail::sparse(a.ring(), a.coeffs(), terms, out.coeffs());
  return out;
}

/// Multiplicative inverse through q^trunc. The constant term must be +1 or
/// -1; anything else cannot be inverted over the integers.
template <class Ring>
BasicSeries<Ring> inverse(const BasicSeries<Ring>& a) {
  if (!a.ring().is_pm_one(a[0]))
    throw NonUnitConstantTerm("series_inv: constant term must be +1 or -1");
  BasicSeries<Ring> out(a.ring(), a.trunc());
  detail::inv(a.ring(), a.coeffs(), out.coeffs());
  return out;
}

template <class Ring>
BasicSeries<Ring> scaled(const BasicSeries<Ring>& a,
                         const typename Ring::Coeff& c) {
  BasicSeries<Ring> out(a.ring(), a.trunc());
  for (long n = 0; n <= a.trunc(); ++n) out.at(n) = a.ring().mul(a[n], c);
  return out;
}

/// q^k * a; the shifted series is exact through q^(trunc + k).
template <class Ring>
BasicSeries<Ring> shifted(const BasicSeries<Ring>& a, long k) {
  if (k < 0) throw std::invalid_argument("shifted: negative exponent shift");
  BasicSeries<Ring> out(a.ring(), a.trunc() + k);
  for (long n = 0; n <= a.trunc(); ++n) out.at(n + k) = a[n];
  return out;
}

/// a^e at fixed truncation, exponent >= 0, by binary powering.
template <class Ring>
BasicSeries<Ring> pow_series(const BasicSeries<Ring>& a, long e) {
  if (e < 0) throw std::invalid_argument("pow_series: negative exponent");
  BasicSeries<Ring> acc =
      BasicSeries<Ring>::constant(a.ring(), a.trunc(), 1);
  BasicSeries<Ring> base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

/// Coefficients along the arithmetic progression mn + t: result[n] = a[mn+t],
/// truncated at floor((T - t)/m).
template <class Ring>
BasicSeries<Ring> extract_ap(const BasicSeries<Ring>& a, long m, long t) {
  if (m < 1 || t < 0 || t >= m)
    throw std::invalid_argument("extract_ap: need 0 <= t < m");
  if (t > a.trunc())
    throw EmptyExtraction("extract_ap: offset beyond truncation order");
  BasicSeries<Ring> out(a.ring(), (a.trunc() - t) / m);
  for (long n = 0; n <= out.trunc(); ++n) out.at(n) = a[m * n + t];
  return out;
}

/// First exponent (up to the smaller truncation) where the two series
/// differ, or nullopt when they agree on the whole shared range.
template <class Ring>
std::optional<long> first_mismatch(const BasicSeries<Ring>& a,
                                   const BasicSeries<Ring>& b) {
  detail::require_same_ring(a, b);
  const long top = std::min(a.trunc(), b.trunc());
  for (long n = 0; n <= top; ++n)
    if (!(a[n] == b[n])) return n;
  return std::nullopt;
}

template <class Ring>
bool equal_through(const BasicSeries<Ring>& a, const BasicSeries<Ring>& b,
                   long top) {
  detail::require_same_ring(a, b);
  if (a.trunc() < top || b.trunc() < top)
    throw TruncationTooSmall("equal_through: series shorter than range");
  for (long n = 0; n <= top; ++n)
    if (!(a[n] == b[n])) return false;
  return true;
}

/// Residues of an exact series modulo the given ring's modulus.
inline ModSeries reduce(const Series& a, const ModCoeffs& ring) {
  ModSeries out(ring, a.trunc());
  for (long n = 0; n <= a.trunc(); ++n) out.at(n) = ring.reduce(a[n]);
  return out;
}

}  // namespace regover
