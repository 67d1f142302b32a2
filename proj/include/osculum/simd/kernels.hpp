#pragma once

#include <cstddef>

// Row kernels for elimination modulo a prime p < 2^26. Residues are stored as
// doubles holding exact integers in [0, p), so products stay below 2^52.
namespace osculum::simd {

using SubmulFn = void (*)(double* dst, const double* src, double c, double p,
                          double pinv, std::size_t n);
using ScaleFn = void (*)(double* dst, double c, double p, double pinv,
                         std::size_t n);

struct ModKernels {
  const char* name;
  SubmulFn submul;  // dst[i] = (dst[i] - c * src[i]) mod p
  ScaleFn scale;    // dst[i] = (c * dst[i]) mod p
};

const ModKernels& scalar_kernels();
const ModKernels& avx2_kernels();

bool avx2_supported();

// Kernels picked once per process. OSCULUM_SIMD=scalar forces the reference.
const ModKernels& active_kernels();

}  // namespace osculum::simd
