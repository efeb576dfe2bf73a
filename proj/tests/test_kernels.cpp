#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "wildtorus/kernels.hpp"
#include "wildtorus/rng.hpp"

using namespace wildtorus;

namespace {

std::vector<uint64_t> random_words(SplitMix64& rng, size_t n, int density_shift) {
  std::vector<uint64_t> w(n);
  for (auto& x : w) {
    x = rng.next();
    for (int d = 0; d < density_shift; ++d) x &= rng.next();
  }
  return w;
}

std::vector<const simd::Kernels*> variants() {
  int count = 0;
  const simd::Kernels* const* list = simd::available_kernels(count);
  return {list, list + count};
}

} // namespace

TEST_CASE("row_shifted_and_any: variants agree with scalar on random rows") {
  SplitMix64 rng(42);
  auto vars = variants();
  REQUIRE(vars.size() >= 1);
  for (int trial = 0; trial < 400; ++trial) {
    size_t na = 1 + rng.below(24), nb = 1 + rng.below(24);
    auto a = random_words(rng, na, int(rng.below(3)));
    auto b = random_words(rng, nb, int(rng.below(3)));
    long long bits_a = (long long)na * 64;
    long long j0 = (long long)rng.below(uint64_t(bits_a));
    long long j1 = j0 + (long long)rng.below(uint64_t(bits_a - j0 + 1));
    long long shift = (long long)rng.below(4096) - 2048;
    bool ref = simd::scalar_kernels().row_shifted_and_any(a.data(), b.data(), (long long)nb,
                                                          shift, j0, j1);
    for (const auto* k : vars) {
      bool got = k->row_shifted_and_any(a.data(), b.data(), (long long)nb, shift, j0, j1);
      CHECK_MESSAGE(got == ref, "kernel ", k->name, " trial ", trial);
    }
  }
}

TEST_CASE("row_shifted_and_any: hand cases") {
  const auto& K = simd::scalar_kernels();
  uint64_t a = 1ull << 10;
  uint64_t b = 1ull << 3;
  // bit 10 of a vs bit 10-7=3 of b
  CHECK(K.row_shifted_and_any(&a, &b, 1, 7, 0, 64));
  CHECK_FALSE(K.row_shifted_and_any(&a, &b, 1, 6, 0, 64));
  // window excludes the hit
  CHECK_FALSE(K.row_shifted_and_any(&a, &b, 1, 7, 11, 64));
  CHECK_FALSE(K.row_shifted_and_any(&a, &b, 1, 7, 0, 10));
}

TEST_CASE("dilate3_row: variants agree with scalar") {
  SplitMix64 rng(43);
  auto vars = variants();
  for (int trial = 0; trial < 300; ++trial) {
    size_t n = 1 + rng.below(20);
    auto up = random_words(rng, n, 2);
    auto mid = random_words(rng, n, 2);
    auto dn = random_words(rng, n, 2);
    bool use_up = rng.below(2), use_dn = rng.below(2);
    std::vector<uint64_t> ref(n), got(n);
    simd::scalar_kernels().dilate3_row(use_up ? up.data() : nullptr, mid.data(),
                                       use_dn ? dn.data() : nullptr, ref.data(), (long long)n);
    for (const auto* k : vars) {
      k->dilate3_row(use_up ? up.data() : nullptr, mid.data(), use_dn ? dn.data() : nullptr,
                     got.data(), (long long)n);
      CHECK_MESSAGE(got == ref, "kernel ", k->name, " trial ", trial);
    }
  }
}

TEST_CASE("dilate3_row semantics: single bit spreads to 3x1 with carries") {
  const auto& K = simd::scalar_kernels();
  std::vector<uint64_t> mid{1ull << 63, 0};
  std::vector<uint64_t> out(2);
  K.dilate3_row(nullptr, mid.data(), nullptr, out.data(), 2);
  CHECK(out[0] == ((1ull << 63) | (1ull << 62)));
  CHECK(out[1] == 1ull);
}

TEST_CASE("stamp_segment_row: variants bit-identical to scalar") {
  SplitMix64 rng(44);
  auto vars = variants();
  for (int trial = 0; trial < 300; ++trial) {
    long long width = 64 + (long long)rng.below(512);
    size_t words = size_t((width + 63) / 64);
    double h = 1.0 / 128.0;
    double x0 = rng.uniform(-2, 2);
    double cy = rng.uniform(-2, 2);
    double ax = rng.uniform(-2, 2), ay = rng.uniform(-2, 2);
    double bx = ax + rng.uniform(-1, 1), by = ay + rng.uniform(-1, 1);
    if (ax == bx && ay == by) bx += h;
    double r2 = rng.uniform(1e-6, 0.05);
    long long j0 = (long long)rng.below(uint64_t(width));
    long long j1 = j0 + (long long)rng.below(uint64_t(width - j0 + 1));
    std::vector<uint64_t> ref(words, 0), got(words, 0);
    simd::scalar_kernels().stamp_segment_row(ref.data(), j0, j1, x0, h, cy, ax, ay, bx, by, r2);
    for (const auto* k : vars) {
      std::fill(got.begin(), got.end(), 0);
      k->stamp_segment_row(got.data(), j0, j1, x0, h, cy, ax, ay, bx, by, r2);
      CHECK_MESSAGE(got == ref, "kernel ", k->name, " trial ", trial);
    }
  }
}

TEST_CASE("active kernel dispatch names a real variant") {
  const auto& k = simd::active_kernels();
  bool known = std::string(k.name) == "scalar" || std::string(k.name) == "avx2";
  CHECK(known);
}
