#include "osculum/simd/kernels.hpp"

#include <cstdint>

namespace osculum::simd {
namespace {

void submul_scalar(double* dst, const double* src, double c, double p, double,
                   std::size_t n) {
  const auto pm = static_cast<std::uint64_t>(p);
  const auto cm = static_cast<std::uint64_t>(c);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<std::uint64_t>(dst[i]);
    const std::uint64_t prod = cm * static_cast<std::uint64_t>(src[i]) % pm;
    dst[i] = static_cast<double>(x >= prod ? x - prod : x + pm - prod);
  }
}

void scale_scalar(double* dst, double c, double p, double, std::size_t n) {
  const auto pm = static_cast<std::uint64_t>(p);
  const auto cm = static_cast<std::uint64_t>(c);
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<double>(cm * static_cast<std::uint64_t>(dst[i]) % pm);
}

}  // namespace

const ModKernels& scalar_kernels() {
  static const ModKernels k{"scalar", submul_scalar, scale_scalar};
  return k;
}

}  // namespace osculum::simd
