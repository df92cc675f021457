// Compiled with -mavx2 only when the toolchain targets x86-64; the dispatcher
// asks the CPU before handing out this table.
#include "platkit/kernels.hpp"

#if defined(PLATKIT_HAVE_AVX2)
#include <immintrin.h>

#include <limits>

namespace platkit::kernels {
namespace {

inline __m256i load(const Coeff* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Coeff* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void add_avx2(Coeff* dst, const Coeff* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_add_epi64(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] += src[i];
}

void sub_avx2(Coeff* dst, const Coeff* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_sub_epi64(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] -= src[i];
}

// Low 64 bits of a 64x64 product from three 32x32->64 multiplies.
inline __m256i mullo_epi64(__m256i a, __m256i b) {
  __m256i a_hi = _mm256_srli_epi64(a, 32);
  __m256i b_hi = _mm256_srli_epi64(b, 32);
  __m256i lo = _mm256_mul_epu32(a, b);
  __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void axpy_avx2(Coeff* dst, Coeff a, const Coeff* src, std::size_t n) {
  std::size_t i = 0;
  if (a == 1) {
    add_avx2(dst, src, n);
    return;
  }
  if (a == -1) {
    sub_avx2(dst, src, n);
    return;
  }
  const __m256i va = _mm256_set1_epi64x(a);
  for (; i + 4 <= n; i += 4) {
    store(dst + i, _mm256_add_epi64(load(dst + i), mullo_epi64(va, load(src + i))));
  }
  const auto ua = static_cast<std::uint64_t>(a);
  for (; i < n; ++i) {
    dst[i] = static_cast<Coeff>(static_cast<std::uint64_t>(dst[i]) +
                                ua * static_cast<std::uint64_t>(src[i]));
  }
}

Coeff max_abs_avx2(const Coeff* src, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i sat = _mm256_set1_epi64x(std::numeric_limits<Coeff>::max());
  __m256i best = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = load(src + i);
    __m256i neg = _mm256_cmpgt_epi64(zero, v);
    __m256i abs = _mm256_sub_epi64(_mm256_xor_si256(v, neg), neg);
    // INT64_MIN has no positive counterpart
    abs = _mm256_blendv_epi8(abs, sat, _mm256_cmpgt_epi64(zero, abs));
    best = _mm256_blendv_epi8(best, abs, _mm256_cmpgt_epi64(abs, best));
  }
  alignas(32) Coeff lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
  Coeff result = 0;
  for (Coeff l : lanes) result = l > result ? l : result;
  for (; i < n; ++i) {
    Coeff v = src[i];
    Coeff m = v == std::numeric_limits<Coeff>::min() ? std::numeric_limits<Coeff>::max()
                                                     : (v < 0 ? -v : v);
    if (m > result) result = m;
  }
  return result;
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const KernelTable table{"avx2", add_avx2, sub_avx2, axpy_avx2, max_abs_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
}

}  // namespace platkit::kernels

#else

namespace platkit::kernels {
const KernelTable* avx2_kernels() noexcept { return nullptr; }
}  // namespace platkit::kernels

#endif
