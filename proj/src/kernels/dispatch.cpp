#include <cstdlib>
#include <cstring>

#include "wildtorus/errors.hpp"
#include "wildtorus/kernels.hpp"

namespace wildtorus::simd {

namespace {

const Kernels& pick() {
  const char* env = std::getenv("WILDTORUS_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return scalar_kernels();
#if WT_HAVE_AVX2
  bool have_avx2 = __builtin_cpu_supports("avx2");
  if (env && std::strcmp(env, "avx2") == 0) {
    if (!have_avx2) fail(Errc::bad_config, "WILDTORUS_SIMD=avx2 but cpu lacks avx2");
    return avx2_kernels();
  }
  if (env && std::strcmp(env, "auto") != 0 && std::strcmp(env, "") != 0)
    fail(Errc::bad_config, std::string("unknown WILDTORUS_SIMD value: ") + env);
  return have_avx2 ? avx2_kernels() : scalar_kernels();
#else
  if (env && std::strcmp(env, "avx2") == 0)
    fail(Errc::bad_config, "this build has no avx2 kernels");
  return scalar_kernels();
#endif
}

} // namespace

const Kernels* const* available_kernels(int& count) {
  static const Kernels* list[2] = {&scalar_kernels(), nullptr};
  static int n = [] {
    int c = 1;
#if WT_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) {
      list[1] = &avx2_kernels();
      c = 2;
    }
#endif
    return c;
  }();
  count = n;
  return list;
}

const Kernels& active_kernels() {
  static const Kernels& k = pick();
  return k;
}

} // namespace wildtorus::simd
