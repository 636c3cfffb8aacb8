#include "regover/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace regover::kernels {

namespace {

std::atomic<Mode> g_mode{
#ifdef _OPENMP
    Mode::parallel
#else
    Mode::serial
#endif
};

// below this size the parallel backends run the serial code path
constexpr std::size_t kParallelCutoff = 512;

// within-block size of the blocked inversion; the in-block recurrence is
// serial, everything before the block is a convolution
constexpr std::size_t kInvertBlock = 512;

}  // namespace

Mode mode() noexcept { return g_mode.load(std::memory_order_relaxed); }

void set_mode(Mode m) noexcept { g_mode.store(m, std::memory_order_relaxed); }

bool parallel_available() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

//----------------------------------------------------------------------------
// serial reference kernels
//----------------------------------------------------------------------------

namespace serial {

void convolve(std::span<const Int> a, std::span<const Int> b,
              std::span<Int> out) {
  assert(out.size() <= a.size() && out.size() <= b.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    Int acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (mpz_sgn(a[k].get_mpz_t()) != 0) acc += a[k] * b[n - k];
    }
    out[n] = std::move(acc);
  }
}

void convolve(const ModCoeffs& ring, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  assert(out.size() <= a.size() && out.size() <= b.size());
  assert(out.size() < (std::size_t{1} << 30));
  const std::uint64_t u = ring.modulus();
  for (std::size_t n = 0; n < out.size(); ++n) {
    std::uint64_t acc = 0;  // terms < u < 2^32, so the staged sum fits
    for (std::size_t k = 0; k <= n; ++k) acc += (a[k] * b[n - k]) % u;
    out[n] = acc % u;
  }
}

void sparse_mul(std::span<const Int> a, std::span<const SparseTerm> terms,
                std::span<Int> out) {
  assert(out.size() <= a.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    Int acc = 0;
    for (const auto& t : terms) {
      if (static_cast<std::size_t>(t.exp) > n) break;
      const Int& v = a[n - t.exp];
      if (t.coeff == 1)
        acc += v;
      else if (t.coeff == -1)
        acc -= v;
      else
        acc += t.coeff * v;
    }
    out[n] = std::move(acc);
  }
}

void sparse_mul(const ModCoeffs& ring, std::span<const std::uint64_t> a,
                std::span<const SparseTerm> terms,
                std::span<std::uint64_t> out) {
  assert(out.size() <= a.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    std::uint64_t acc = 0;
    for (const auto& t : terms) {
      if (static_cast<std::size_t>(t.exp) > n) break;
      const std::uint64_t v = a[n - t.exp];
      if (t.coeff == 1)
        acc = ring.add(acc, v);
      else if (t.coeff == -1)
        acc = ring.sub(acc, v);
      else
        acc = ring.add(acc, ring.mul(ring.from_long(t.coeff), v));
    }
    out[n] = acc;
  }
}

void invert(std::span<const Int> a, std::span<Int> out) {
  assert(!a.empty() && out.size() <= a.size());
  assert(a[0] == 1 || a[0] == -1);
  const bool negate = (a[0] == 1);  // b_n = -a0 * sum, a0 = +/-1
  out[0] = a[0];
  for (std::size_t n = 1; n < out.size(); ++n) {
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += a[n - j] * out[j];
    out[n] = negate ? Int(-acc) : std::move(acc);
  }
}

void invert(const ModCoeffs& ring, std::span<const std::uint64_t> a,
            std::span<std::uint64_t> out) {
  assert(!a.empty() && out.size() <= a.size());
  assert(ring.is_pm_one(a[0]));
  assert(out.size() < (std::size_t{1} << 30));
  const std::uint64_t u = ring.modulus();
  const std::uint64_t b0 = a[0];  // self-inverse unit
  out[0] = b0;
  for (std::size_t n = 1; n < out.size(); ++n) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += (a[n - j] * out[j]) % u;
    out[n] = ring.neg(ring.mul(b0, acc % u));
  }
}

}  // namespace serial

//----------------------------------------------------------------------------
// OpenMP kernels
//----------------------------------------------------------------------------

namespace omp {

#ifndef _OPENMP

void convolve(std::span<const Int> a, std::span<const Int> b,
              std::span<Int> out) {
  serial::convolve(a, b, out);
}
void convolve(const ModCoeffs& ring, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  serial::convolve(ring, a, b, out);
}
void sparse_mul(std::span<const Int> a, std::span<const SparseTerm> terms,
                std::span<Int> out) {
  serial::sparse_mul(a, terms, out);
}
void sparse_mul(const ModCoeffs& ring, std::span<const std::uint64_t> a,
                std::span<const SparseTerm> terms,
                std::span<std::uint64_t> out) {
  serial::sparse_mul(ring, a, terms, out);
}
void invert(std::span<const Int> a, std::span<Int> out) {
  serial::invert(a, out);
}
void invert(const ModCoeffs& ring, std::span<const std::uint64_t> a,
            std::span<std::uint64_t> out) {
  serial::invert(ring, a, out);
}

#else

void convolve(std::span<const Int> a, std::span<const Int> b,
              std::span<Int> out) {
  if (out.size() < kParallelCutoff) return serial::convolve(a, b, out);
  assert(out.size() <= a.size() && out.size() <= b.size());
  const std::ptrdiff_t n_out = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t n = 0; n < n_out; ++n) {
    Int acc = 0;
    for (std::ptrdiff_t k = 0; k <= n; ++k) {
      if (mpz_sgn(a[k].get_mpz_t()) != 0) acc += a[k] * b[n - k];
    }
    out[n] = std::move(acc);
  }
}

void convolve(const ModCoeffs& ring, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  if (out.size() < kParallelCutoff) return serial::convolve(ring, a, b, out);
  assert(out.size() <= a.size() && out.size() <= b.size());
  assert(out.size() < (std::size_t{1} << 30));
  const std::uint64_t u = ring.modulus();
  const std::ptrdiff_t n_out = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t n = 0; n < n_out; ++n) {
    std::uint64_t acc = 0;
    for (std::ptrdiff_t k = 0; k <= n; ++k) acc += (a[k] * b[n - k]) % u;
    out[n] = acc % u;
  }
}

void sparse_mul(std::span<const Int> a, std::span<const SparseTerm> terms,
                std::span<Int> out) {
  if (out.size() < kParallelCutoff) return serial::sparse_mul(a, terms, out);
  assert(out.size() <= a.size());
  const std::ptrdiff_t n_out = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < n_out; ++n) {
    Int acc = 0;
    for (const auto& t : terms) {
      if (t.exp > n) break;
      const Int& v = a[n - t.exp];
      if (t.coeff == 1)
        acc += v;
      else if (t.coeff == -1)
        acc -= v;
      else
        acc += t.coeff * v;
    }
    out[n] = std::move(acc);
  }
}

void sparse_mul(const ModCoeffs& ring, std::span<const std::uint64_t> a,
                std::span<const SparseTerm> terms,
                std::span<std::uint64_t> out) {
  if (out.size() < kParallelCutoff)
    return serial::sparse_mul(ring, a, terms, out);
  assert(out.size() <= a.size());
  const std::ptrdiff_t n_out = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < n_out; ++n) {
    std::uint64_t acc = 0;
    for (const auto& t : terms) {
      if (t.exp > n) break;
      const std::uint64_t v = a[n - t.exp];
      if (t.coeff == 1)
        acc = ring.add(acc, v);
      else if (t.coeff == -1)
        acc = ring.sub(acc, v);
      else
        acc = ring.add(acc, ring.mul(ring.from_long(t.coeff), v));
    }
    out[n] = acc;
  }
}

/* Blocked inversion: coefficients in [s, s+B) first receive the contribution
 * of the already-known prefix b[0..s) as an ordinary (parallel) convolution
 * slice, then the short in-block recurrence runs serially. */
void invert(std::span<const Int> a, std::span<Int> out) {
  if (out.size() < kParallelCutoff) return serial::invert(a, out);
  assert(!a.empty() && out.size() <= a.size());
  assert(a[0] == 1 || a[0] == -1);
  const bool negate = (a[0] == 1);
  out[0] = a[0];
  std::vector<Int> prefix(kInvertBlock);
  for (std::size_t s = 1; s < out.size(); s += kInvertBlock) {
    const std::size_t e = std::min(out.size(), s + kInvertBlock);
    const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(s);
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(e);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t n = lo; n < hi; ++n) {
      Int acc = 0;
      for (std::ptrdiff_t j = 0; j < lo; ++j) acc += a[n - j] * out[j];
      prefix[n - lo] = std::move(acc);
    }
    for (std::size_t n = s; n < e; ++n) {
      Int acc = std::move(prefix[n - s]);
      for (std::size_t j = s; j < n; ++j) acc += a[n - j] * out[j];
      out[n] = negate ? Int(-acc) : std::move(acc);
    }
  }
}

void invert(const ModCoeffs& ring, std::span<const std::uint64_t> a,
            std::span<std::uint64_t> out) {
  if (out.size() < kParallelCutoff) return serial::invert(ring, a, out);
  assert(!a.empty() && out.size() <= a.size());
  assert(ring.is_pm_one(a[0]));
  assert(out.size() < (std::size_t{1} << 30));
  const std::uint64_t u = ring.modulus();
  const std::uint64_t b0 = a[0];
  out[0] = b0;
  std::vector<std::uint64_t> prefix(kInvertBlock);
  for (std::size_t s = 1; s < out.size(); s += kInvertBlock) {
    const std::size_t e = std::min(out.size(), s + kInvertBlock);
    const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(s);
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(e);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = lo; n < hi; ++n) {
      std::uint64_t acc = 0;
      for (std::ptrdiff_t j = 0; j < lo; ++j) acc += (a[n - j] * out[j]) % u;
      prefix[n - lo] = acc % u;
    }
    for (std::size_t n = s; n < e; ++n) {
      std::uint64_t acc = prefix[n - s];
      for (std::size_t j = s; j < n; ++j) acc += (a[n - j] * out[j]) % u;
      out[n] = ring.neg(ring.mul(b0, acc % u));
    }
  }
}

#endif  // _OPENMP

}  // namespace omp

//----------------------------------------------------------------------------
// dispatchers
//----------------------------------------------------------------------------

void convolve(std::span<const Int> a, std::span<const Int> b,
              std::span<Int> out) {
  if (mode() == Mode::parallel)
    omp::convolve(a, b, out);
  else
    serial::convolve(a, b, out);
}

void convolve(const ModCoeffs& ring, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out) {
  if (mode() == Mode::parallel)
    omp::convolve(ring, a, b, out);
  else
    serial::convolve(ring, a, b, out);
}

void sparse_mul(std::span<const Int> a, std::span<const SparseTerm> terms,
                std::span<Int> out) {
  if (mode() == Mode::parallel)
    omp::sparse_mul(a, terms, out);
  else
    serial::sparse_mul(a, terms, out);
}

void sparse_mul(const ModCoeffs& ring, std::span<const std::uint64_t> a,
                std::span<const SparseTerm> terms,
                std::span<std::uint64_t> out) {
  if (mode() == Mode::parallel)
    omp::sparse_mul(ring, a, terms, out);
  else
    serial::sparse_mul(ring, a, terms, out);
}

void invert(std::span<const Int> a, std::span<Int> out) {
  if (mode() == Mode::parallel)
    omp::invert(a, out);
  else
    serial::invert(a, out);
}

void invert(const ModCoeffs& ring, std::span<const std::uint64_t> a,
            std::span<std::uint64_t> out) {
  if (mode() == Mode::parallel)
    omp::invert(ring, a, out);
  else
    serial::invert(ring, a, out);
}

}  // namespace regover::kernels
