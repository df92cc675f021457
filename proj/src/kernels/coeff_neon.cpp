#include "platkit/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

#include <limits>

namespace platkit::kernels {
namespace {

void add_neon(Coeff* dst, const Coeff* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_s64(dst + i, vaddq_s64(vld1q_s64(dst + i), vld1q_s64(src + i)));
  for (; i < n; ++i) dst[i] += src[i];
}

void sub_neon(Coeff* dst, const Coeff* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_s64(dst + i, vsubq_s64(vld1q_s64(dst + i), vld1q_s64(src + i)));
  for (; i < n; ++i) dst[i] -= src[i];
}

// NEON has no 64-bit lane multiply; the scalar loop is what the compiler
// would emit anyway, so only the ±1 fast paths are vectorised.
void axpy_neon(Coeff* dst, Coeff a, const Coeff* src, std::size_t n) {
  if (a == 1) return add_neon(dst, src, n);
  if (a == -1) return sub_neon(dst, src, n);
  const auto ua = static_cast<std::uint64_t>(a);
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<Coeff>(static_cast<std::uint64_t>(dst[i]) +
                                ua * static_cast<std::uint64_t>(src[i]));
  }
}

Coeff max_abs_neon(const Coeff* src, std::size_t n) {
  Coeff best = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    int64x2_t v = vqabsq_s64(vld1q_s64(src + i));  // saturating, INT64_MIN -> INT64_MAX
    Coeff a = vgetq_lane_s64(v, 0), b = vgetq_lane_s64(v, 1);
    best = a > best ? a : best;
    best = b > best ? b : best;
  }
  for (; i < n; ++i) {
    Coeff v = src[i];
    Coeff m = v == std::numeric_limits<Coeff>::min() ? std::numeric_limits<Coeff>::max()
                                                     : (v < 0 ? -v : v);
    if (m > best) best = m;
  }
  return best;
}

}  // namespace

const KernelTable* neon_kernels() noexcept {
  static const KernelTable table{"neon", add_neon, sub_neon, axpy_neon, max_abs_neon};
  return &table;
}

}  // namespace platkit::kernels

#else

namespace platkit::kernels {
const KernelTable* neon_kernels() noexcept { return nullptr; }
}  // namespace platkit::kernels

#endif
