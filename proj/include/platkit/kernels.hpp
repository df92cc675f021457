#pragma once

// Dense int64 coefficient kernels used by the Laurent polynomial arithmetic.
//
// Every kernel has a scalar reference implementation. SIMD variants (AVX2 on
// x86-64, NEON on aarch64) are compiled into separate translation units and
// chosen once at startup; tests check them against the scalar path.

#include <cstdint>
#include <span>
#include <string_view>

namespace platkit::kernels {

using Coeff = std::int64_t;

struct KernelTable {
  std::string_view name;
  // dst[i] += src[i]
  void (*add)(Coeff* dst, const Coeff* src, std::size_t n);
  // dst[i] -= src[i]
  void (*sub)(Coeff* dst, const Coeff* src, std::size_t n);
  // dst[i] += a * src[i]   (wrapping; callers bound magnitudes first)
  void (*axpy)(Coeff* dst, Coeff a, const Coeff* src, std::size_t n);
  // max |src[i]|, saturating at INT64_MAX
  Coeff (*max_abs)(const Coeff* src, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// AVX2 table, or nullptr when not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// NEON table, or nullptr off aarch64.
const KernelTable* neon_kernels() noexcept;

/// Table picked at first use. PLATKIT_SIMD=scalar forces the reference path.
const KernelTable& active() noexcept;

inline void add(std::span<Coeff> dst, std::span<const Coeff> src) noexcept {
  active().add(dst.data(), src.data(), src.size());
}
inline void sub(std::span<Coeff> dst, std::span<const Coeff> src) noexcept {
  active().sub(dst.data(), src.data(), src.size());
}
inline void axpy(std::span<Coeff> dst, Coeff a, std::span<const Coeff> src) noexcept {
  active().axpy(dst.data(), a, src.data(), src.size());
}
inline Coeff max_abs(std::span<const Coeff> src) noexcept {
  return active().max_abs(src.data(), src.size());
}

}  // namespace platkit::kernels
