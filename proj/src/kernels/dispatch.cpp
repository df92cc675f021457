#include <cstdlib>
#include <string_view>

#include "platkit/kernels.hpp"

namespace platkit::kernels {

const KernelTable& active() noexcept {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    const char* force = std::getenv("PLATKIT_SIMD");
    if (force != nullptr && std::string_view(force) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    if (const KernelTable* t = neon_kernels()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace platkit::kernels
