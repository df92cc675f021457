#pragma once

// Exact one-variable Laurent polynomials with int64 coefficients.
//
// Stored densely: coefficient k of the vector belongs to exponent low + k.
// The vector never has zero entries at either end, so structural equality is
// term-by-term equality. Arithmetic runs through the dispatched coefficient
// kernels and throws std::overflow_error rather than wrapping.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "platkit/kernels.hpp"

namespace platkit {

using kernels::Coeff;

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::string var) : var_(std::move(var)) {}

  static LaurentPolynomial constant(Coeff c, std::string var = "A");
  static LaurentPolynomial monomial(Coeff c, int exponent, std::string var = "A");
  static LaurentPolynomial from_terms(const std::map<int, Coeff>& terms, std::string var = "A");
  /// Dense coefficients starting at `low`; zeros at the ends are trimmed.
  static LaurentPolynomial from_dense(int low, std::vector<Coeff> coeffs, std::string var = "A");

  const std::string& var() const noexcept { return var_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coeff coefficient(int exponent) const noexcept;
  std::map<int, Coeff> terms() const;
  std::size_t term_count() const noexcept;
  const std::vector<Coeff>& dense() const noexcept { return coeffs_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;

  /// this += scale * var^shift * p. The hot path of the skein evaluation.
  void add_shifted(const LaurentPolynomial& p, int shift, Coeff scale = 1);

  /// Multiplication by var^k.
  LaurentPolynomial shifted(int k) const;
  /// var -> var^-1.
  LaurentPolynomial inverted_variable() const;
  /// Same coefficients under another variable name.
  LaurentPolynomial renamed(std::string var) const;

  /// Multiply by ±var^k so the lowest exponent is 0 with a positive coefficient.
  LaurentPolynomial unit_normalized() const;

  /// Exact value at var = +1 or var = -1.
  Coeff evaluate_at_sign(int sign) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  /// Descending exponents, "A^3 - A^-5"; the zero polynomial prints as "0".
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) noexcept;
  /// Total order used to pick canonical representatives: span, then exponents, then coefficients.
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) noexcept;

 private:
  void trim();
  void reserve_range(int lo, int hi);
  const std::string& merged_var(const LaurentPolynomial& other) const;

  std::string var_ = "A";
  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Exact quotient a / b in Z[var^±1], or nullopt if b does not divide a.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// gcd in Z[var^±1], unit-normalized. gcd(0, 0) = 0.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace platkit
