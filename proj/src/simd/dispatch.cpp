#include <cstdlib>
#include <cstring>

#include "osculum/simd/kernels.hpp"

namespace osculum::simd {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const ModKernels& active_kernels() {
  static const ModKernels& k = [&]() -> const ModKernels& {
    const char* env = std::getenv("OSCULUM_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return scalar_kernels();
    return avx2_supported() ? avx2_kernels() : scalar_kernels();
  }();
  return k;
}

}  // namespace osculum::simd
