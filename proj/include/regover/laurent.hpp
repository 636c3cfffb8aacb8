#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "regover/series.hpp"

namespace regover {

/// A truncated Laurent series: an integer exponent offset in front of an
/// ordinary Series, i.e. q^offset * sum_{n=0..T} c_n q^n. Keeps negative
/// exponents (monomial prefactors like q^-3) out of the core series type.
class Laurent {
 public:
  Laurent(long offset, Series series)
      : offset_(offset), s_(std::move(series)) {}

  static Laurent constant(long trunc, const Int& value) {
    Series s(IntCoeffs{}, trunc);
    s.at(0) = value;
    return Laurent(0, std::move(s));
  }

  long offset() const { return offset_; }
  /// Largest exponent the coefficients are exact through.
  long valid_to() const { return offset_ + s_.trunc(); }
  const Series& series() const { return s_; }

  /// Coefficient of q^e; exponents below the offset are zero, exponents
  /// beyond valid_to() are unknown and throw.
  Int coefficient(long e) const {
    if (e < offset_) return Int(0);
    if (e > valid_to())
      throw TruncationTooSmall("Laurent: exponent beyond valid range");
    return s_[e - offset_];
  }

 private:
  long offset_;
  Series s_;
};

inline Laurent mul(const Laurent& a, const Laurent& b) {
  return Laurent(a.offset() + b.offset(), mul(a.series(), b.series()));
}

inline Laurent add(const Laurent& a, const Laurent& b) {
  const long off = std::min(a.offset(), b.offset());
  const long top = std::min(a.valid_to(), b.valid_to());
  Series out(IntCoeffs{}, top - off);
  for (long e = off; e <= top; ++e)
    out.at(e - off) = a.coefficient(e) + b.coefficient(e);
  return Laurent(off, std::move(out));
}

inline Laurent scaled(const Laurent& a, const Int& c) {
  return Laurent(a.offset(), scaled(a.series(), c));
}

/// Horner evaluation of an integer polynomial (coefficients low to high) at
/// a Laurent value; a degree-d polynomial costs d multiplications, so the
/// result stays exact through valid_to(x) + (d-1) * offset(x) for negative
/// offsets.
inline Laurent eval_poly(const std::vector<Int>& poly, const Laurent& x) {
  const long trunc = x.series().trunc();
  if (poly.empty()) return Laurent::constant(trunc, Int(0));
  Laurent acc = Laurent::constant(trunc, poly.back());
  for (std::size_t i = poly.size() - 1; i-- > 0;) {
    acc = mul(acc, x);
    acc = add(acc, Laurent::constant(trunc, poly[i]));
  }
  return acc;
}

/// First exponent in [from, to] where the two sides differ; nullopt when
/// they agree on the whole window.
inline std::optional<long> laurent_mismatch(const Laurent& a, const Laurent& b,
                                            long from, long to) {
  for (long e = from; e <= to; ++e)
    if (a.coefficient(e) != b.coefficient(e)) return e;
  return std::nullopt;
}

}  // namespace regover
