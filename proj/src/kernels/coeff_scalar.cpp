#include "platkit/kernels.hpp"

#include <limits>

namespace platkit::kernels {
namespace {

void add_scalar(Coeff* dst, const Coeff* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

void sub_scalar(Coeff* dst, const Coeff* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] -= src[i];
}

void axpy_scalar(Coeff* dst, Coeff a, const Coeff* src, std::size_t n) {
  // unsigned arithmetic so wrap-around matches the SIMD lanes bit for bit
  const auto ua = static_cast<std::uint64_t>(a);
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<Coeff>(static_cast<std::uint64_t>(dst[i]) +
                                ua * static_cast<std::uint64_t>(src[i]));
  }
}

Coeff max_abs_scalar(const Coeff* src, std::size_t n) {
  Coeff best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Coeff v = src[i];
    Coeff m = v == std::numeric_limits<Coeff>::min() ? std::numeric_limits<Coeff>::max()
                                                     : (v < 0 ? -v : v);
    if (m > best) best = m;
  }
  return best;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar", add_scalar, sub_scalar, axpy_scalar, max_abs_scalar};
  return table;
}

}  // namespace platkit::kernels
