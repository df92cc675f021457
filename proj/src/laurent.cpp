#include "platkit/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "platkit/error.hpp"

namespace platkit {
namespace {

constexpr Coeff kSafeAddBound = Coeff{1} << 62;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

// dst += scale * src over n entries, through the kernels when it cannot overflow.
void accumulate(Coeff* dst, Coeff scale, const Coeff* src, std::size_t n) {
  if (n == 0 || scale == 0) return;
  const auto& k = kernels::active();
  Coeff dst_max = k.max_abs(dst, n);
  Coeff src_max = k.max_abs(src, n);
  __int128 bound = static_cast<__int128>(src_max) * (scale < 0 ? -static_cast<__int128>(scale) : scale);
  if (dst_max < kSafeAddBound && bound < kSafeAddBound) {
    k.axpy(dst, scale, src, n);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) dst[i] = checked_add(dst[i], checked_mul(scale, src[i]));
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(Coeff c, std::string var) {
  return monomial(c, 0, std::move(var));
}

LaurentPolynomial LaurentPolynomial::monomial(Coeff c, int exponent, std::string var) {
  LaurentPolynomial p(std::move(var));
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::map<int, Coeff>& terms, std::string var) {
  LaurentPolynomial p(std::move(var));
  if (terms.empty()) return p;
  int lo = terms.begin()->first;
  int hi = terms.rbegin()->first;
  p.low_ = lo;
  p.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (auto [e, c] : terms) p.coeffs_[static_cast<std::size_t>(e - lo)] = c;
  p.trim();
  return p;
}

LaurentPolynomial LaurentPolynomial::from_dense(int low, std::vector<Coeff> coeffs, std::string var) {
  LaurentPolynomial p(std::move(var));
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Coeff LaurentPolynomial::coefficient(int exponent) const noexcept {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, Coeff> LaurentPolynomial::terms() const {
  std::map<int, Coeff> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

std::size_t LaurentPolynomial::term_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; }));
}

void LaurentPolynomial::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](Coeff c) { return c != 0; }).base();
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(last, coeffs_.end());
  coeffs_.erase(coeffs_.begin(), first);
}

void LaurentPolynomial::reserve_range(int lo, int hi) {
  if (coeffs_.empty()) {
    low_ = lo;
    coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    return;
  }
  int cur_hi = max_exponent();
  if (hi > cur_hi) coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(hi - cur_hi), 0);
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
    low_ = lo;
  }
}

const std::string& LaurentPolynomial::merged_var(const LaurentPolynomial& other) const {
  if (var_ == other.var_ || other.is_constant()) return var_;
  if (is_constant()) return other.var_;
  throw Error("precondition", "Laurent polynomials in different variables: " + var_ + ", " + other.var_);
}

void LaurentPolynomial::add_shifted(const LaurentPolynomial& p, int shift, Coeff scale) {
  if (p.is_zero() || scale == 0) return;
  var_ = merged_var(p);
  int lo = p.low_ + shift;
  int hi = p.max_exponent() + shift;
  reserve_range(is_zero() ? lo : std::min(lo, low_), is_zero() ? hi : std::max(hi, max_exponent()));
  accumulate(coeffs_.data() + (lo - low_), scale, p.coeffs_.data(), p.coeffs_.size());
  trim();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  add_shifted(other, 0, 1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  add_shifted(other, 0, -1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(var_);
  r.add_shifted(*this, 0, -1);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPolynomial LaurentPolynomial::inverted_variable() const {
  LaurentPolynomial r(var_);
  if (is_zero()) return r;
  r.low_ = -max_exponent();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

LaurentPolynomial LaurentPolynomial::renamed(std::string var) const {
  LaurentPolynomial r = *this;
  r.var_ = std::move(var);
  return r;
}

LaurentPolynomial LaurentPolynomial::unit_normalized() const {
  if (is_zero()) return *this;
  LaurentPolynomial r = shifted(-low_);
  if (r.coeffs_.front() < 0) r = -r;
  return r;
}

Coeff LaurentPolynomial::evaluate_at_sign(int sign) const {
  Coeff total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int e = low_ + static_cast<int>(i);
    Coeff c = (sign < 0 && (e % 2 != 0)) ? -coeffs_[i] : coeffs_[i];
    total = checked_add(total, c);
  }
  return total;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    total += static_cast<double>(coeffs_[i]) * std::pow(x, low_ + static_cast<int>(i));
  }
  return total;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Coeff c = coeffs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || e == 0) out << mag;
    if (e != 0) {
      out << var_;
      if (e != 1) out << '^' << e;
    }
    first = false;
  }
  return out.str();
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) noexcept {
  if (a.coeffs_ != b.coeffs_ || a.low_ != b.low_) return false;
  return a.is_constant() || a.var_ == b.var_;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) noexcept {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  if (a.low_ != b.low_) return a.low_ < b.low_;
  return a.coeffs_ < b.coeffs_;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
  a += b;
  return a;
}

LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
  a -= b;
  return a;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  std::string var = a.is_constant() ? b.var() : a.var();
  if (!a.is_constant() && !b.is_constant() && a.var() != b.var()) {
    throw Error("precondition", "Laurent polynomials in different variables: " + a.var() + ", " + b.var());
  }
  if (a.is_zero() || b.is_zero()) return LaurentPolynomial(var);
  const auto& shorter = a.dense().size() <= b.dense().size() ? a : b;
  const auto& longer = &shorter == &a ? b : a;
  std::vector<Coeff> out(a.dense().size() + b.dense().size() - 1, 0);
  const auto& k = kernels::active();
  __int128 bound = static_cast<__int128>(k.max_abs(a.dense().data(), a.dense().size())) *
                   k.max_abs(b.dense().data(), b.dense().size()) *
                   static_cast<__int128>(shorter.dense().size());
  const auto& ld = longer.dense();
  const auto& sd = shorter.dense();
  if (bound < (static_cast<__int128>(1) << 63)) {
    for (std::size_t i = 0; i < sd.size(); ++i) {
      if (sd[i] != 0) k.axpy(out.data() + i, sd[i], ld.data(), ld.size());
    }
  } else {
    for (std::size_t i = 0; i < sd.size(); ++i) {
      for (std::size_t j = 0; j < ld.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(sd[i], ld[j]));
    }
  }
  return LaurentPolynomial::from_dense(a.min_exponent() + b.min_exponent(), std::move(out), var);
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw Error("precondition", "division by the zero polynomial");
  if (a.is_zero()) return LaurentPolynomial(a.var());
  // Both dense vectors start at a nonzero constant term, so Z[t] long division
  // from the top is exact iff the Laurent division is.
  std::vector<Coeff> rem = a.dense();
  const std::vector<Coeff>& div = b.dense();
  if (rem.size() < div.size()) return std::nullopt;
  std::vector<Coeff> quot(rem.size() - div.size() + 1, 0);
  Coeff lead = div.back();
  for (std::size_t q = quot.size(); q-- > 0;) {
    Coeff top = rem[q + div.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Coeff factor = top / lead;
    quot[q] = factor;
    for (std::size_t j = 0; j < div.size(); ++j) rem[q + j] = checked_add(rem[q + j], checked_mul(-factor, div[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](Coeff c) { return c != 0; })) return std::nullopt;
  std::string var = a.is_constant() ? b.var() : a.var();
  return LaurentPolynomial::from_dense(a.min_exponent() - b.min_exponent(), std::move(quot), var);
}

namespace {

Coeff content(const std::vector<Coeff>& c) {
  Coeff g = 0;
  for (Coeff x : c) g = std::gcd(g, x);
  return g;
}

std::vector<Coeff> primitive(std::vector<Coeff> c) {
  Coeff g = content(c);
  if (g > 1) {
    for (Coeff& x : c) x /= g;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// Pseudo-remainder of a by b in Z[t] (dense, constant term first).
std::vector<Coeff> pseudo_remainder(std::vector<Coeff> a, const std::vector<Coeff>& b) {
  Coeff lead = b.back();
  while (a.size() >= b.size()) {
    Coeff top = a.back();
    std::size_t offset = a.size() - b.size();
    for (Coeff& x : a) x = checked_mul(x, lead);
    for (std::size_t j = 0; j < b.size(); ++j) a[offset + j] = checked_add(a[offset + j], checked_mul(-top, b[j]));
    a.pop_back();
    a = primitive(std::move(a));
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  std::string var = a.is_constant() ? b.var() : a.var();
  if (a.is_zero()) return b.unit_normalized();
  if (b.is_zero()) return a.unit_normalized();
  Coeff c = std::gcd(content(a.dense()), content(b.dense()));
  std::vector<Coeff> x = primitive(a.dense());
  std::vector<Coeff> y = primitive(b.dense());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Coeff> r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive(std::move(r));
  }
  x = primitive(std::move(x));
  for (Coeff& v : x) v = checked_mul(v, c);
  return LaurentPolynomial::from_dense(0, std::move(x), var).unit_normalized();
}

}  // namespace platkit
