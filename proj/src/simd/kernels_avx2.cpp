// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "milnor/simd/kernels.hpp"

#include <immintrin.h>

namespace milnor::simd::detail {
namespace {

// Residues travel as doubles: c * a + b < 2^53 for p < 2^26, so the
// product is exact and one floor-multiply plus a correction reduces it.
inline __m256d reduce_pd(__m256d x, __m256d vp, __m256d vpinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vpinv));
  __m256d r = _mm256_fnmadd_pd(q, vp, x);
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, vp));
  __m256d big = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
  return _mm256_sub_pd(r, _mm256_and_pd(big, vp));
}

inline __m256d load4(const std::uint32_t* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

inline void store4(std::uint32_t* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvttpd_epi32(v));
}

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                   std::size_t n) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vpinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d x0 = _mm256_fmadd_pd(vc, load4(src + i), load4(dst + i));
    __m256d x1 = _mm256_fmadd_pd(vc, load4(src + i + 4), load4(dst + i + 4));
    store4(dst + i, reduce_pd(x0, vp, vpinv));
    store4(dst + i + 4, reduce_pd(x1, vp, vpinv));
  }
  for (; i + 4 <= n; i += 4) store4(dst + i, reduce_pd(_mm256_fmadd_pd(vc, load4(src + i), load4(dst + i)), vp, vpinv));
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void mul_mod_avx2(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::uint32_t p,
                  std::size_t n) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vpinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store4(dst + i, reduce_pd(_mm256_mul_pd(load4(a + i), load4(b + i)), vp, vpinv));
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) * b[i] % p);
}

std::ptrdiff_t find_divisor_avx2(const std::uint64_t* leads, std::size_t n, std::uint64_t target) {
  const __m256i vt = _mm256_set1_epi64x(static_cast<long long>(target));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(leads + i));
    __m256i eq = _mm256_cmpeq_epi64(_mm256_max_epu8(v, vt), vt);
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(eq));
    if (mask) return static_cast<std::ptrdiff_t>(i + __builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
    __m128i v = _mm_cvtsi64_si128(static_cast<long long>(leads[i]));
    __m128i t = _mm_cvtsi64_si128(static_cast<long long>(target));
    if (_mm_cvtsi128_si64(_mm_max_epu8(v, t)) == static_cast<long long>(target))
      return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

const Kernels kAvx2Kernels{Isa::Avx2, axpy_mod_avx2, mul_mod_avx2, find_divisor_avx2};

}  // namespace

const Kernels* avx2_kernels() { return &kAvx2Kernels; }

}  // namespace milnor::simd::detail
