#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace regover {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact arbitrary-precision integer coefficients.
struct IntCoeffs {
  using Coeff = Int;

  Coeff zero() const { return Int(0); }
  Coeff one() const { return Int(1); }
  Coeff from_long(long v) const { return Int(v); }

  Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
  Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff neg(const Coeff& a) const { return -a; }

  bool is_zero(const Coeff& a) const { return a == 0; }
  // +1 and -1 are the only constant terms a truncated series can be
  // inverted at; both are their own inverses.
  bool is_pm_one(const Coeff& a) const { return a == 1 || a == -1; }

  bool operator==(const IntCoeffs&) const = default;
};

/// Residue coefficients modulo a fixed u with 2 <= u < 2^32. Keeping the
/// modulus below 2^32 lets convolution kernels form each product in 64 bits
/// and stage long sums without intermediate reduction (see kernels.cpp).
class ModCoeffs {
 public:
  using Coeff = std::uint64_t;

  explicit ModCoeffs(std::uint64_t modulus) : u_(modulus) {
    if (modulus < 2 || modulus > 0xFFFFFFFFull)
      throw std::invalid_argument("ModCoeffs: modulus must be in [2, 2^32)");
  }

  std::uint64_t modulus() const { return u_; }

  Coeff zero() const { return 0; }
  Coeff one() const { return 1 % u_; }
  Coeff from_long(long v) const {
    long r = v % static_cast<long>(u_);
    if (r < 0) r += static_cast<long>(u_);
    return static_cast<Coeff>(r);
  }
  Coeff reduce(const Int& v) const {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(u_));
  }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= u_ ? s - u_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + u_ - b; }
  Coeff mul(Coeff a, Coeff b) const { return (a * b) % u_; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : u_ - a; }

  bool is_zero(Coeff a) const { return a == 0; }
  bool is_pm_one(Coeff a) const { return a == 1 % u_ || a == u_ - 1; }

  bool operator==(const ModCoeffs&) const = default;

 private:
  std::uint64_t u_;
};

}  // namespace regover
