#pragma once

#include <cstdint>
#include <span>

#include "regover/rings.hpp"

/* Low-level coefficient kernels behind the series operations.
 *
 * Every kernel exists twice: a plain serial reference in kernels::serial and
 * an OpenMP version in kernels::omp. The dispatching wrappers in
 * regover::kernels pick one at runtime via set_mode(); tests compare the two
 * implementations on random inputs and bench/bench_kernels.cpp times them.
 *
 * Contracts (shared by both backends):
 *   convolve    out[n] = sum_{i+j=n} a[i]*b[j],   out.size() <= min(|a|,|b|)
 *   sparse_mul  out[n] = sum_{e<=n} c_e * a[n-e], out.size() <= |a|
 *   invert      out * a = 1 through the output length; a[0] must be a unit
 *               equal to its own inverse (+1/-1, checked by the caller)
 */

namespace regover::kernels {

enum class Mode { serial, parallel };

Mode mode() noexcept;
void set_mode(Mode m) noexcept;
bool parallel_available() noexcept;

/// One term c * q^exp of a sparse series; eta factors only ever use c = +/-1.
struct SparseTerm {
  long exp;
  long coeff;
};

namespace serial {
void convolve(std::span<const Int> a, std::span<const Int> b,
              std::span<Int> out);
void convolve(const ModCoeffs& ring, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out);
void sparse_mul(std::span<const Int> a, std::span<const SparseTerm> terms,
                std::span<Int> out);
void sparse_mul(const ModCoeffs& ring, std::span<const std::uint64_t> a,
                std::span<const SparseTerm> terms,
                std::span<std::uint64_t> out);
void invert(std::span<const Int> a, std::span<Int> out);
void invert(const ModCoeffs& ring, std::span<const std::uint64_t> a,
            std::span<std::uint64_t> out);
}  // namespace serial

namespace omp {
void convolve(std::span<const Int> a, std::span<const Int> b,
              std::span<Int> out);
void convolve(const ModCoeffs& ring, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out);
void sparse_mul(std::span<const Int> a, std::span<const SparseTerm> terms,
                std::span<Int> out);
void sparse_mul(const ModCoeffs& ring, std::span<const std::uint64_t> a,
                std::span<const SparseTerm> terms,
                std::span<std::uint64_t> out);
void invert(std::span<const Int> a, std::span<Int> out);
void invert(const ModCoeffs& ring, std::span<const std::uint64_t> a,
            std::span<std::uint64_t> out);
}  // namespace omp

// mode()-dispatching entry points used by the series layer
void convolve(std::span<const Int> a, std::span<const Int> b,
              std::span<Int> out);
void convolve(const ModCoeffs& ring, std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b, std::span<std::uint64_t> out);
void sparse_mul(std::span<const Int> a, std::span<const SparseTerm> terms,
                std::span<Int> out);
void sparse_mul(const ModCoeffs& ring, std::span<const std::uint64_t> a,
                std::span<const SparseTerm> terms, std::span<std::uint64_t> out);
void invert(std::span<const Int> a, std::span<Int> out);
void invert(const ModCoeffs& ring, std::span<const std::uint64_t> a,
            std::span<std::uint64_t> out);

}  // namespace regover::kernels
