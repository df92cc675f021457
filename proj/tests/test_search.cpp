#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "platkit/error.hpp"
#include "platkit/invariants.hpp"
#include "platkit/search.hpp"
#include "support.hpp"

using namespace platkit;

namespace {
Plat plat(int strands, std::vector<int> letters) { return Plat(BraidWord::from_signed(strands, letters)); }

SearchBudget small_budget() {
  SearchBudget b;
  b.max_nodes = 200'000;
  b.max_seconds = 20;
  return b;
}

Plat scramble(std::mt19937& rng, const Plat& p, int moves) {
  const auto cat = hilden_generators(p.bridges());
  std::uniform_int_distribution<std::size_t> pick(0, cat.generators.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Plat q = p;
  for (int k = 0; k < moves; ++k) {
    q = apply_move(q, coin(rng) ? Side::top : Side::bottom, cat.generators[pick(rng)].name, coin(rng) == 1);
  }
  return q;
}
}  // namespace

TEST_CASE("one catalog letter apart") {
  const auto r = equivalence_search(plat(2, {1}), plat(2, {}), small_budget());
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE(r.trace.has_value());
  CHECK(r.trace->moves.size() == 1);
  CHECK(verify_trace(*r.trace));
}

TEST_CASE("different certificates short-circuit") {
  const auto r = equivalence_search(plat(4, {}), plat(4, {2, 2, 2}), small_budget());
  CHECK(r.status == SearchStatus::distinct_certificates);
  CHECK(r.reason.find("component") != std::string::npos);
  CHECK_THROWS_AS(equivalence_search(plat(2, {}), plat(4, {}), small_budget()), Error);
}

TEST_CASE("scrambled unknots are unscrambled with verifying traces") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 12; ++trial) {
    const Plat trivial = plat(trial % 2 == 0 ? 4 : 6, {});
    const Plat q = scramble(rng, trivial, 3);
    CAPTURE(to_text(q.word()));
    const auto r = equivalence_search(q, trivial, small_budget());
    REQUIRE(r.status == SearchStatus::found);
    CHECK(verify_trace(*r.trace));
    CHECK(r.trace->start == q);
    CHECK(r.trace->end == trivial);
  }
}

TEST_CASE("trace verification rejects corrupted moves") {
  std::mt19937 rng(12);
  const Plat trivial = plat(4, {});
  const Plat q = scramble(rng, trivial, 3);
  auto r = equivalence_search(q, trivial, small_budget());
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE_FALSE(r.trace->moves.empty());
  MoveTrace t = *r.trace;
  CHECK(verify_trace(t));

  MoveTrace flipped = t;
  flipped.moves.front().inverse = !flipped.moves.front().inverse;
  if (flipped.moves.front().kind != MoveKind::hilden_left && flipped.moves.front().kind != MoveKind::hilden_right) {
    flipped.moves.front().position += 1;
  }
  CHECK_FALSE(verify_trace(flipped));

  MoveTrace dropped = t;
  dropped.moves.pop_back();
  CHECK_FALSE(verify_trace(dropped));

  MoveTrace wrong_end = t;
  wrong_end.end = plat(4, {2, 2});
  CHECK_FALSE(verify_trace(wrong_end));

  CHECK(verify_trace(MoveTrace{trivial, {}, trivial}));
  CHECK_FALSE(verify_trace(MoveTrace{trivial, {}, plat(4, {1})}));
}

TEST_CASE("moves invert") {
  const Plat p = plat(4, {2, 1, 3});
  const Move m{MoveKind::hilden_right, "cross_1", false, 0, {}, {}};
  CHECK(replay_move(replay_move(p, m), inverse_move(m)) == p);
  const Move bad{MoveKind::free_delete, "", false, 0, {BraidLetter(2, 1), BraidLetter(2, -1)}, {}};
  CHECK_THROWS_AS(replay_move(p, bad), Error);
  for (MoveKind k : {MoveKind::hilden_left, MoveKind::hilden_right, MoveKind::braid_relation, MoveKind::free_insert,
                     MoveKind::free_delete}) {
    CHECK(move_kind_from_string(to_string(k)) == k);
  }
}

TEST_CASE("search is deterministic") {
  std::mt19937 rng(77);
  const Plat trivial = plat(6, {});
  const Plat q = scramble(rng, trivial, 4);
  const auto a = equivalence_search(q, trivial, small_budget());
  const auto b = equivalence_search(q, trivial, small_budget());
  REQUIRE(a.status == b.status);
  CHECK(a.stats.nodes == b.stats.nodes);
  if (a.trace) CHECK(a.trace->moves == b.trace->moves);
}

TEST_CASE("a larger budget never loses a Found") {
  std::mt19937 rng(31);
  const Plat trivial = plat(4, {});
  const Plat q = scramble(rng, trivial, 3);
  auto budget = small_budget();
  const auto a = equivalence_search(q, trivial, budget);
  budget.max_nodes *= 4;
  const auto b = equivalence_search(q, trivial, budget);
  if (a.status == SearchStatus::found) CHECK(b.status == SearchStatus::found);
}

TEST_CASE("destabilization search") {
  const auto direct = destabilization_search(plat(4, {1, 2}), small_budget());
  REQUIRE(direct.status == SearchStatus::found);
  CHECK(*direct.smaller == plat(2, {1}));
  CHECK(direct.trace->moves.empty());

  std::mt19937 rng(55);
  for (int trial = 0; trial < 6; ++trial) {
    const Plat base = Plat(free_reduce(testing::random_word(rng, 4, 5)));
    const Plat q = scramble(rng, stabilize(base, trial % 2 ? 1 : -1), 3);
    CAPTURE(to_text(q.word()));
    const auto r = destabilization_search(q, small_budget());
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.smaller->strands() == 4);
    // Bridge counts differ, so compare the link invariants rather than the coset type.
    const auto small = certificate(*r.smaller), big = certificate(q);
    CHECK(small.components == big.components);
    CHECK(small.jones == big.jones);
    CHECK(small.alexander == big.alexander);
    CHECK(verify_trace(*r.trace));
  }
  CHECK_THROWS_AS(destabilization_search(plat(2, {1}), small_budget()), Error);
}

TEST_CASE("PLATKIT_BUDGET_NODES overrides the default") {
  CHECK(default_budget().max_seconds == 30.0);
  CHECK_FALSE(default_budget().max_word_length.has_value());
  const char* old = std::getenv("PLATKIT_BUDGET_NODES");
  const std::string saved = old ? old : "";
  ::setenv("PLATKIT_BUDGET_NODES", "1234", 1);
  CHECK(default_budget().max_nodes == 1234);
  ::setenv("PLATKIT_BUDGET_NODES", "junk", 1);
  CHECK(default_budget().max_nodes == 1'000'000);
  if (old) ::setenv("PLATKIT_BUDGET_NODES", saved.c_str(), 1);
  else ::unsetenv("PLATKIT_BUDGET_NODES");
}
