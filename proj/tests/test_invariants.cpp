#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "platkit/invariants.hpp"
#include "platkit/plat.hpp"
#include "support.hpp"

using namespace platkit;

namespace {
Plat plat(int strands, std::vector<int> letters) { return Plat(BraidWord::from_signed(strands, letters)); }
LaurentPolynomial a_poly(std::map<int, Coeff> t) { return LaurentPolynomial::from_terms(t, "A"); }
LaurentPolynomial t_poly(std::map<int, Coeff> t) { return LaurentPolynomial::from_terms(t, "t"); }
}  // namespace

TEST_CASE("state-sum oracle agrees with the Temperley-Lieb bracket") {
  std::mt19937 rng(1);
  for (int strands : {2, 4, 6}) {
    for (int trial = 0; trial < 80; ++trial) {
      const auto w = testing::random_word(rng, strands, trial % 9);
      CAPTURE(to_text(w));
      CHECK(kauffman_bracket_plat(w) == testing::state_sum_bracket(w));
    }
  }
}

TEST_CASE("bracket normalisation and the skein relation") {
  CHECK(kauffman_bracket_plat(BraidWord(2, {})) == a_poly({{0, 1}}));
  const auto delta = a_poly({{2, -1}, {-2, -1}});
  CHECK(kauffman_bracket_plat(BraidWord(4, {})) == delta);
  // <σ> = A<id> + A^-1<e> on the 2-plat: id closes one loop, e closes two.
  CHECK(kauffman_bracket_plat(BraidWord::from_signed(2, {1})) == a_poly({{1, 1}}) + a_poly({{-1, 1}}) * delta);
}

TEST_CASE("trefoil anchor against both oracles") {
  const auto p = plat(4, {2, 2, 2});
  const auto c = certificate(p);
  CHECK(c.components == 1);
  CHECK(c.jones.term_count() == 3);
  CHECK(c.jones == a_poly({{-4, 1}, {-12, 1}, {-16, -1}}));
  CHECK(kauffman_bracket_plat(p.word()) == testing::state_sum_bracket(p.word()));

  const auto fox = testing::fox_trefoil_alexander();
  CHECK(c.alexander == LaurentPolynomial::from_terms(fox, "t").unit_normalized());
  CHECK(c.alexander == t_poly({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(std::llabs(c.alexander.evaluate_at_sign(-1)) == 3);
  CHECK(determinant_from_jones(c.jones) == 3);
  CHECK(jones_in_t(c.jones) == t_poly({{1, 1}, {3, 1}, {4, -1}}));
}

TEST_CASE("|Δ(-1)| = |V(-1)| and |Δ(1)| = 1 on random knots") {
  std::mt19937 rng(99);
  int knots = 0;
  for (int trial = 0; trial < 300 && knots < 60; ++trial) {
    const auto p = testing::random_plat(rng, 3, 10);
    if (component_count(p) != 1) continue;
    ++knots;
    const auto c = certificate(p);
    CAPTURE(to_text(p.word()));
    CHECK(std::llabs(c.alexander.evaluate_at_sign(-1)) == determinant_from_jones(c.jones));
    CHECK(std::llabs(c.alexander.evaluate_at_sign(1)) == 1);
  }
  CHECK(knots >= 30);
}

TEST_CASE("known links") {
  const auto hopf = certificate(plat(4, {2, 2}));
  CHECK(hopf.components == 2);
  CHECK(hopf.jones == a_poly({{4, -1}, {-4, -1}}));
  CHECK(hopf.alexander == t_poly({{0, 1}, {1, -1}}));
  const auto unlink = certificate(plat(4, {}));
  CHECK(unlink.alexander.is_zero());
  const auto ex = certificate(plat(6, {2, 4, 1, 3, 1}));
  CHECK(ex.jones == a_poly({{0, 1}}));
  CHECK(ex.alexander == t_poly({{0, 1}}));
  CHECK(determinant_from_jones(certificate(plat(4, {2, 2, 2, 2, 2})).jones) == 5);
}

TEST_CASE("mirror image inverts the Jones variable") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = testing::random_word(rng, 4, 7);
    std::vector<int> mirrored;
    for (int v : w.as_signed()) mirrored.push_back(-v);
    CHECK(jones_plat(BraidWord::from_signed(4, mirrored)) == jones_plat(w).inverted_variable());
  }
}

TEST_CASE("coset type reads the union of matchings") {
  CHECK(coset_type(BraidWord(6, {})).parts == std::vector<int>{1, 1, 1});
  CHECK(coset_type(BraidWord::from_signed(4, {2})).parts == std::vector<int>{2});
  CHECK(coset_type(BraidWord::from_signed(6, {2, 4, 1, 3, 1})).parts == std::vector<int>{3});
}

TEST_CASE("Fox row of a hand relator") {
  // x y x^-1 y^-1 (commutator): d/dx = 1 - x y x^-1 -> 1 - t, d/dy = x - x y x^-1 y^-1 -> t - 1.
  const FreeWord r{{0, 1}, {1, 1}, {0, -1}, {1, -1}};
  const auto row = fox_row(r, 2);
  CHECK(row[0] == t_poly({{0, 1}, {1, -1}}));
  CHECK(row[1] == t_poly({{0, -1}, {1, 1}}));
}

TEST_CASE("Burau representation") {
  const auto b = burau(BraidWord::from_signed(4, {1, -1, 2}));
  CHECK(b == burau(BraidWord::from_signed(4, {2})));
  CHECK(burau(BraidWord::from_signed(4, {1, 2, 1})) == burau(BraidWord::from_signed(4, {2, 1, 2})));
  CHECK(burau(BraidWord(4, {}), true).rows() == 3);
}

TEST_CASE("certificates are invariant under every catalog move") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_plat(rng, 3, 8);
    const auto c = certificate(p);
    for (const auto& g : hilden_generators(p.bridges()).generators) {
      for (Side side : {Side::top, Side::bottom}) {
        for (bool inv : {false, true}) {
          CHECK(certificate(apply_move(p, side, g.name, inv)) == c);
        }
      }
    }
  }
}

TEST_CASE("certificate differences are explained") {
  const auto a = certificate(plat(4, {}));
  const auto b = certificate(plat(4, {2, 2, 2}));
  CHECK_FALSE(certificate_difference(a, b).empty());
  CHECK(certificate_difference(a, a).empty());
}
