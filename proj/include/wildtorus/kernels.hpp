#pragma once
// Data-parallel inner loops behind the grid-region operations, provided as a
// scalar reference implementation plus SIMD variants selected at runtime.
// Every variant must produce bit-identical output to the scalar kernels; the
// test suite enforces this on random inputs. Select explicitly with
// WILDTORUS_SIMD=scalar|avx2 (default: best available).
#include <cstdint>

namespace wildtorus::simd {

struct Kernels {
  const char* name;

  // Does row `a` intersect row `b` shifted right by `shift` bits, over local
  // bit positions j in [j0, j1) of `a`?  Bit j of `a` is tested against bit
  // (j - shift) of `b`; out-of-range b-bits read as 0. `b_words` is the word
  // count of b (bounds for the shifted reads). shift may be negative.
  bool (*row_shifted_and_any)(const uint64_t* a, const uint64_t* b,
                              long long b_words, long long shift,
                              long long j0, long long j1);

  // Chebyshev-1 dilation of a row triple: out = smear1(up | mid | down)
  // where smear1(x) spreads each bit to its left/right neighbors, with
  // carries across word boundaries. `n` words; up/down may be null (treated
  // as zero rows).
  void (*dilate3_row)(const uint64_t* up, const uint64_t* mid,
                      const uint64_t* down, uint64_t* out, long long n);

  // Stamp bits j in [j0, j1) of `row` whose cell center (x0 + (j+0.5)*h, cy)
  // lies within squared distance r2 of segment [a,b]. ORs into `row`.
  void (*stamp_segment_row)(uint64_t* row, long long j0, long long j1,
                            double x0, double h, double cy, double ax,
                            double ay, double bx, double by, double r2);
};

const Kernels& scalar_kernels();
#if WT_HAVE_AVX2
const Kernels& avx2_kernels();
#endif

// every variant compiled in and runnable on this cpu, scalar first
const Kernels* const* available_kernels(int& count);

// runtime-dispatched active set (cpuid + WILDTORUS_SIMD override)
const Kernels& active_kernels();

} // namespace wildtorus::simd
