#include <immintrin.h>

#include <cmath>

#include "osculum/simd/kernels.hpp"

namespace osculum::simd {
namespace {

inline double reduce_one(double t, double p, double pinv) {
  double q = std::floor(t * pinv);
  double r = std::fma(-q, p, t);
  if (r < 0) r += p;
  if (r >= p) r -= p;
  return r;
}

inline __m256d reduce4(__m256d t, __m256d vp, __m256d vpinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vpinv));
  __m256d r = _mm256_fnmadd_pd(q, vp, t);
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, vp));
  __m256d big = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
  return _mm256_sub_pd(r, _mm256_and_pd(big, vp));
}

void submul_avx2(double* dst, const double* src, double c, double p,
                 double pinv, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_fnmadd_pd(vc, _mm256_loadu_pd(src + i),
                                 _mm256_loadu_pd(dst + i));
    _mm256_storeu_pd(dst + i, reduce4(t, vp, vpinv));
  }
  for (; i < n; ++i) dst[i] = reduce_one(std::fma(-c, src[i], dst[i]), p, pinv);
}

void scale_avx2(double* dst, double c, double p, double pinv, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_mul_pd(vc, _mm256_loadu_pd(dst + i));
    _mm256_storeu_pd(dst + i, reduce4(t, vp, vpinv));
  }
  for (; i < n; ++i) dst[i] = reduce_one(c * dst[i], p, pinv);
}

}  // namespace

const ModKernels& avx2_kernels() {
  static const ModKernels k{"avx2", submul_avx2, scale_avx2};
  return k;
}

}  // namespace osculum::simd
