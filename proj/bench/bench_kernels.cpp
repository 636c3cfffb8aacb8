// Timings of the serial vs OpenMP kernels on the sizes the verification
// workloads actually use (reduced-mode series up to ~24k terms, exact series
// up to ~2k terms). Run: ./bench_kernels [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "regover/eta.hpp"
#include "regover/kernels.hpp"
#include "regover/qseries.hpp"

using namespace regover;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    f();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

void report(const char* name, long size, double serial_s, double parallel_s) {
  std::printf("%-28s n=%-7ld serial %8.4fs  omp %8.4fs  speedup %.2fx\n",
              name, size, serial_s, parallel_s, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  std::printf("OpenMP backend available: %s\n",
              kernels::parallel_available() ? "yes" : "no");

  std::mt19937 rng(123);
  std::uniform_int_distribution<long> dist(-9, 9);

  // reduced-coefficient kernels
  const std::vector<long> mod_sizes =
      quick ? std::vector<long>{4096, 8192} : std::vector<long>{4096, 16384};
  for (long size : mod_sizes) {
    const ModCoeffs ring(864);
    std::vector<std::uint64_t> a(size + 1), b(size + 1), out(size + 1);
    for (auto& v : a) v = ring.from_long(dist(rng));
    for (auto& v : b) v = ring.from_long(dist(rng));
    a[0] = 1;

    report("convolve (mod 864)", size,
           time_best_of(3, [&] { kernels::serial::convolve(ring, a, b, out); }),
           time_best_of(3, [&] { kernels::omp::convolve(ring, a, b, out); }));
    report("invert (mod 864)", size,
           time_best_of(3, [&] { kernels::serial::invert(ring, a, out); }),
           time_best_of(3, [&] { kernels::omp::invert(ring, a, out); }));
    const auto terms = eta_factor_terms(1, size);
    report("sparse_mul (mod 864)", size,
           time_best_of(3,
                        [&] { kernels::serial::sparse_mul(ring, a, terms, out); }),
           time_best_of(3,
                        [&] { kernels::omp::sparse_mul(ring, a, terms, out); }));
  }

  // exact-coefficient kernels
  const std::vector<long> big_sizes =
      quick ? std::vector<long>{1024} : std::vector<long>{1024, 2048};
  for (long size : big_sizes) {
    std::vector<Int> a(size + 1), b(size + 1), out(size + 1);
    for (auto& v : a) v = dist(rng);
    for (auto& v : b) v = dist(rng);
    a[0] = 1;
    report("convolve (bigint)", size,
           time_best_of(3, [&] { kernels::serial::convolve(a, b, out); }),
           time_best_of(3, [&] { kernels::omp::convolve(a, b, out); }));
    report("invert (bigint)", size,
           time_best_of(3, [&] { kernels::serial::invert(a, out); }),
           time_best_of(3, [&] { kernels::omp::invert(a, out); }));
  }

  // an end-to-end expansion at the heaviest verification size
  {
    const long top = quick ? 8000 : 23805;
    const FamilyParams fam{FamilyKind::Rbar, 2, 5};
    kernels::set_mode(kernels::Mode::serial);
    const double s = time_best_of(1, [&] {
      gf_family(ModCoeffs(6), fam, top);
    });
    kernels::set_mode(kernels::Mode::parallel);
    const double p = time_best_of(1, [&] {
      gf_family(ModCoeffs(6), fam, top);
    });
    report("gf Rbar(2,5) mod 6", top, s, p);
  }
  return 0;
}
