#include <doctest.h>

#include <stdexcept>

#include "platkit/laurent.hpp"
#include "platkit/matrix.hpp"

using namespace platkit;

namespace {
LaurentPolynomial t_poly(std::map<int, Coeff> terms) { return LaurentPolynomial::from_terms(terms, "t"); }
}  // namespace

TEST_CASE("construction trims and compares structurally") {
  const auto p = LaurentPolynomial::from_dense(-2, {0, 0, 3, 0, -1, 0}, "A");
  CHECK(p.min_exponent() == 0);
  CHECK(p.max_exponent() == 2);
  CHECK(p.term_count() == 2);
  CHECK(p == LaurentPolynomial::from_terms({{0, 3}, {2, -1}}));
  CHECK(LaurentPolynomial::from_dense(4, {0, 0}).is_zero());
  CHECK(LaurentPolynomial::constant(0).is_zero());
}

TEST_CASE("text form") {
  CHECK(LaurentPolynomial::from_terms({{-5, -1}, {3, 1}}).to_string() == "A^3 - A^-5");
  CHECK(LaurentPolynomial("A").to_string() == "0");
  CHECK(LaurentPolynomial::constant(1).to_string() == "1");
  CHECK(t_poly({{0, 1}, {1, -1}, {2, 1}}).to_string() == "t^2 - t + 1");
}

TEST_CASE("ring arithmetic") {
  const auto a = LaurentPolynomial::from_terms({{-1, 1}, {1, 1}});
  const auto b = LaurentPolynomial::from_terms({{-1, 1}, {1, -1}});
  CHECK(a * b == LaurentPolynomial::from_terms({{-2, 1}, {2, -1}}));
  CHECK(a + b == LaurentPolynomial::monomial(2, -1));
  CHECK(a - a == LaurentPolynomial("A"));
  CHECK(-a == LaurentPolynomial::from_terms({{-1, -1}, {1, -1}}));
  CHECK(a.shifted(3) == LaurentPolynomial::from_terms({{2, 1}, {4, 1}}));
  CHECK(b.inverted_variable() == -b);

  LaurentPolynomial acc("A");
  acc.add_shifted(a, 2, -3);
  CHECK(acc == LaurentPolynomial::from_terms({{1, -3}, {3, -3}}));
}

TEST_CASE("evaluation") {
  const auto p = t_poly({{0, 1}, {1, -1}, {2, 1}});
  CHECK(p.evaluate_at_sign(1) == 1);
  CHECK(p.evaluate_at_sign(-1) == 3);
  CHECK(std::abs(p.evaluate({2.0, 0.0}) - std::complex<double>(3.0, 0.0)) < 1e-12);
  CHECK(LaurentPolynomial::monomial(1, -1, "t").evaluate_at_sign(-1) == -1);
}

TEST_CASE("unit normalization picks lowest exponent 0 and a positive constant term") {
  const auto p = t_poly({{-3, -1}, {-2, 1}, {-1, -1}});
  CHECK(p.unit_normalized() == t_poly({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(p.unit_normalized().unit_normalized() == p.unit_normalized());
}

TEST_CASE("exact division and gcd") {
  const auto f = t_poly({{0, 1}, {1, -1}, {2, 1}});
  const auto g = t_poly({{0, 1}, {1, 1}});
  const auto q = divide_exact(f * g, g);
  REQUIRE(q.has_value());
  CHECK(*q == f);
  CHECK_FALSE(divide_exact(f, g).has_value());
  CHECK(gcd(f * g, f.shifted(-4) * t_poly({{0, 2}})) == f);
  CHECK(gcd(t_poly({}), t_poly({})).is_zero());
}

TEST_CASE("overflow is reported, not wrapped") {
  const auto big = LaurentPolynomial::constant(Coeff{1} << 62);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("determinant of a polynomial matrix") {
  PolyMatrix m(2, 2);
  m.at(0, 0) = t_poly({{0, 1}});
  m.at(0, 1) = t_poly({{1, -1}});
  m.at(1, 0) = t_poly({{0, 1}});
  m.at(1, 1) = t_poly({{0, 1}, {1, -1}, {2, 1}});
  CHECK(determinant(m) == t_poly({{0, 1}, {2, 1}}));
  CHECK(determinant(PolyMatrix::identity(4)) == t_poly({{0, 1}}));
}
