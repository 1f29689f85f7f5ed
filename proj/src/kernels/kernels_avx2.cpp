#include "lieforge/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define LIEFORGE_X86 1
#include <immintrin.h>
#else
#define LIEFORGE_X86 0
#endif

namespace lieforge::kernels {

#if LIEFORGE_X86

bool avx2_available() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

namespace {

// Exact (a mod q) for 0 <= a < 2^53 held in doubles. The quotient estimate
// may be off by one in either direction; the two compares repair it.
__attribute__((target("avx2"))) inline __m256d mod_pd(__m256d t, __m256d qv, __m256d inv) {
  __m256d quo = _mm256_floor_pd(_mm256_mul_pd(t, inv));
  __m256d r = _mm256_sub_pd(t, _mm256_mul_pd(quo, qv));
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, qv));
  __m256d big = _mm256_cmp_pd(r, qv, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(big, qv));
  return r;
}

__attribute__((target("avx2"))) inline __m256d load4(const Residue* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

__attribute__((target("avx2"))) inline void store4(Residue* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvttpd_epi32(v));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_avx2(std::span<Residue> dst, std::span<const Residue> src,
                                               Residue c, Residue q) {
  if (c == 0) return;
  if (q >= kMaxSimdModulus) {
    axpy_scalar(dst, src, c, q);
    return;
  }
  const std::size_t n = dst.size();
  const __m256d qv = _mm256_set1_pd(static_cast<double>(q));
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(q));
  const __m256d cv = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d d0 = load4(dst.data() + i);
    __m256d d1 = load4(dst.data() + i + 4);
    __m256d s0 = load4(src.data() + i);
    __m256d s1 = load4(src.data() + i + 4);
    __m256d t0 = _mm256_add_pd(d0, _mm256_mul_pd(cv, s0));
    __m256d t1 = _mm256_add_pd(d1, _mm256_mul_pd(cv, s1));
    store4(dst.data() + i, mod_pd(t0, qv, inv));
    store4(dst.data() + i + 4, mod_pd(t1, qv, inv));
  }
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_add_pd(load4(dst.data() + i), _mm256_mul_pd(cv, load4(src.data() + i)));
    store4(dst.data() + i, mod_pd(t, qv, inv));
  }
  if (i < n) axpy_scalar(dst.subspan(i), src.subspan(i), c, q);
}

__attribute__((target("avx2"))) void scale_avx2(std::span<Residue> dst, Residue c, Residue q) {
  if (q >= kMaxSimdModulus) {
    scale_scalar(dst, c, q);
    return;
  }
  const std::size_t n = dst.size();
  const __m256d qv = _mm256_set1_pd(static_cast<double>(q));
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(q));
  const __m256d cv = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_mul_pd(cv, load4(dst.data() + i));
    store4(dst.data() + i, mod_pd(t, qv, inv));
  }
  if (i < n) scale_scalar(dst.subspan(i), c, q);
}

#else

bool avx2_available() { return false; }
void axpy_avx2(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue q) {
  axpy_scalar(dst, src, c, q);
}
void scale_avx2(std::span<Residue> dst, Residue c, Residue q) { scale_scalar(dst, c, q); }

#endif

}  // namespace lieforge::kernels
