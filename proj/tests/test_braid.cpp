#include <doctest.h>

#include <random>

#include "platkit/braid.hpp"
#include "platkit/error.hpp"
#include "support.hpp"

using namespace platkit;

TEST_CASE("parsing accepts integers, generator notation and a strand header") {
  CHECK(parse_braid_word("2 4 1 3 1").strands() == 6);
  CHECK(parse_braid_word("").strands() == 2);
  CHECK(parse_braid_word("1").strands() == 2);
  CHECK(parse_braid_word("s2 s5^-1 s_3^{-1}").as_signed() == std::vector<int>{2, -5, -3});
  const auto w = parse_braid_word("strands=8; 1 -2");
  CHECK(w.strands() == 8);
  CHECK(to_text(w) == "strands=8; 1 -2");
  CHECK(parse_braid_word(to_text(w)) == w);
  CHECK(parse_braid_word("1", 4).strands() == 4);
}

TEST_CASE("parse errors carry the parse code") {
  for (const char* bad : {"1 x", "0", "strands=4 1", "strands=4; 5"}) {
    CAPTURE(bad);
    try {
      parse_braid_word(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == "parse");
    }
  }
  CHECK_THROWS_AS(parse_braid_word("strands=4; 1", 6), Error);
}

TEST_CASE("free reduction and inversion") {
  const auto w = BraidWord::from_signed(4, {1, 2, -2, -1, 3, 1});
  CHECK(free_reduce(w).as_signed() == std::vector<int>{3, 1});
  CHECK(invert(BraidWord::from_signed(4, {1, -2, 3})).as_signed() == std::vector<int>{-3, 2, -1});
  CHECK(free_reduce(concat(w, invert(w))).empty());
  CHECK(exponent_sum(BraidWord::from_signed(6, {2, 4, 1, 3, 1})) == 5);
}

TEST_CASE("permutation image composes in word order") {
  const auto p = permutation_of(BraidWord::from_signed(4, {1, 2}));
  // σ1 sends 1 -> 2, then σ2 sends 2 -> 3.
  CHECK(p(1) == 3);
  CHECK(p(3) == 2);
  CHECK(p(2) == 1);
  CHECK(p.cycle_type() == std::vector<int>{3, 1});
  CHECK(permutation_of(BraidWord::from_signed(4, {1, -1})) == Permutation::identity(4));
  CHECK(Permutation::then(p, p.inverse()) == Permutation::identity(4));
}

TEST_CASE("every rewrite preserves the permutation and the free-reduced class of relations") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = testing::random_word(rng, 6, 8);
    const auto perm = permutation_of(w);
    for (const Rewrite& r : enumerate_rewrites(w)) {
      const auto v = apply_rewrite(w, r);
      CHECK(permutation_of(v) == perm);
      CHECK(exponent_sum(v) == exponent_sum(w));
    }
  }
}

TEST_CASE("rewrite catalog on small words") {
  const auto w = BraidWord::from_signed(4, {1, 2, 1});
  bool saw_braid = false;
  for (const Rewrite& r : enumerate_rewrites(w, false)) {
    if (r.kind == RewriteKind::braid) {
      saw_braid = true;
      CHECK(apply_rewrite(w, r).as_signed() == std::vector<int>{2, 1, 2});
    }
  }
  CHECK(saw_braid);
  const auto c = BraidWord::from_signed(4, {1, 3});
  const auto next = braid_rewrites(c);
  CHECK(std::find(next.begin(), next.end(), BraidWord::from_signed(4, {3, 1})) != next.end());
  const auto bad = Rewrite{RewriteKind::free_delete, 0, {BraidLetter(1, 1), BraidLetter(1, -1)}, {}};
  CHECK_THROWS_AS(apply_rewrite(c, bad), Error);
}

TEST_CASE("widening keeps letters") {
  const auto w = widen(BraidWord::from_signed(2, {1, -1, 1}), 6);
  CHECK(w.strands() == 6);
  CHECK(w.as_signed() == std::vector<int>{1, -1, 1});
  CHECK(w.max_index() == 1);
}
