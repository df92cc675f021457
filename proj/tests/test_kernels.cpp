#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string_view>
#include <vector>

#include "platkit/kernels.hpp"
#include "platkit/laurent.hpp"

using namespace platkit;
using kernels::Coeff;
using kernels::KernelTable;

namespace {

std::vector<const KernelTable*> vector_tables() {
  std::vector<const KernelTable*> out;
  if (const auto* t = kernels::avx2_kernels()) out.push_back(t);
  if (const auto* t = kernels::neon_kernels()) out.push_back(t);
  return out;
}

std::vector<Coeff> random_coeffs(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Coeff> d(-(Coeff{1} << 40), Coeff{1} << 40);
  std::vector<Coeff> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("vector kernels agree with the scalar reference on every length") {
  const KernelTable& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(7);
  for (const KernelTable* t : vector_tables()) {
    CAPTURE(t->name);
    for (std::size_t n = 0; n <= 67; ++n) {
      const auto src = random_coeffs(rng, n);
      const auto base = random_coeffs(rng, n);
      const Coeff a = std::uniform_int_distribution<Coeff>(-1000, 1000)(rng);

      auto x = base, y = base;
      ref.add(x.data(), src.data(), n);
      t->add(y.data(), src.data(), n);
      CHECK(x == y);

      x = base, y = base;
      ref.sub(x.data(), src.data(), n);
      t->sub(y.data(), src.data(), n);
      CHECK(x == y);

      x = base, y = base;
      ref.axpy(x.data(), a, src.data(), n);
      t->axpy(y.data(), a, src.data(), n);
      CHECK(x == y);

      CHECK(ref.max_abs(src.data(), n) == t->max_abs(src.data(), n));
    }
  }
}

TEST_CASE("max_abs handles the extremes") {
  const std::vector<Coeff> v{3, -9, 4, 0, -2, 8, 1, -1, 5};
  CHECK(kernels::scalar_kernels().max_abs(v.data(), v.size()) == 9);
  for (const KernelTable* t : vector_tables()) CHECK(t->max_abs(v.data(), v.size()) == 9);
  CHECK(kernels::scalar_kernels().max_abs(v.data(), 0) == 0);
}

TEST_CASE("runtime dispatch honours PLATKIT_SIMD=scalar") {
  const char* force = std::getenv("PLATKIT_SIMD");
  if (force != nullptr && std::string_view(force) == "scalar") {
    CHECK(kernels::active().name == kernels::scalar_kernels().name);
  } else if (kernels::avx2_kernels() != nullptr) {
    CHECK(kernels::active().name == kernels::avx2_kernels()->name);
  }
}

TEST_CASE("polynomial products are the same whichever kernel is active") {
  // Schoolbook product written out without the kernels.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_coeffs(rng, 1 + trial % 9);
    const auto b = random_coeffs(rng, 1 + trial % 13);
    std::vector<Coeff> expect(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) expect[i + j] += (a[i] >> 20) * (b[j] >> 20);
    }
    std::vector<Coeff> sa(a.size()), sb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) sa[i] = a[i] >> 20;
    for (std::size_t j = 0; j < b.size(); ++j) sb[j] = b[j] >> 20;
    const auto p = LaurentPolynomial::from_dense(-3, sa) * LaurentPolynomial::from_dense(5, sb);
    CHECK(p == LaurentPolynomial::from_dense(2, expect));
  }
}
