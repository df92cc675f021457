#include <doctest.h>

#include <random>

#include "platkit/error.hpp"
#include "platkit/invariants.hpp"
#include "platkit/plat.hpp"
#include "support.hpp"

using namespace platkit;

namespace {
Plat plat(int strands, std::vector<int> letters) { return Plat(BraidWord::from_signed(strands, letters)); }
}  // namespace

TEST_CASE("plat closure basics") {
  CHECK(component_count(plat(2, {})) == 1);
  CHECK(component_count(plat(4, {})) == 2);
  CHECK(component_count(plat(4, {2, 2, 2})) == 1);
  CHECK(component_count(plat(4, {2, 2})) == 2);
  CHECK(component_count(plat(6, {2, 4, 1, 3, 1})) == 1);
  CHECK_THROWS_AS(Plat(BraidWord::from_signed(3, {1})), Error);
  CHECK(plat(6, {}).top() == Matching::standard(6));
}

TEST_CASE("Hilden catalog names and sizes") {
  const auto c2 = hilden_generators(2);
  REQUIRE(c2.generators.size() == 4);
  CHECK(c2.generators[0].name == "sigma1");
  CHECK(c2.find("twist_2").word.as_signed() == std::vector<int>{3});
  CHECK(c2.find("slide_1").word.as_signed() == std::vector<int>{2, 1, 1, 2});
  CHECK(c2.find("cross_1").word.as_signed() == std::vector<int>{2, 1, 3, 2});
  CHECK(hilden_generators(1).generators.size() == 1);
  CHECK(hilden_generators(3).generators.size() == 6);
  CHECK_THROWS_AS(c2.find("nope"), Error);
}

TEST_CASE("moves multiply on the requested side and free-reduce") {
  const auto p = plat(4, {2, 1});
  CHECK(apply_move(p, Side::top, "sigma1", true).word().as_signed() == std::vector<int>{2});
  CHECK(apply_move(p, Side::bottom, "twist_2").word().as_signed() == std::vector<int>{3, 2, 1});
  const std::vector<GeneratorUse> trace{{"sigma1", false}, {"twist_2", true}};
  const auto g = hilden_word(2, trace);
  CHECK(apply_move(p, Side::top, g, trace).word().as_signed() == std::vector<int>{2, 1, 1, -3});
  const std::vector<GeneratorUse> wrong{{"sigma1", false}};
  CHECK_THROWS_AS(apply_move(p, Side::top, g, wrong), Error);
}

TEST_CASE("stabilization round trip on 100 random plats") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = Plat(free_reduce(testing::random_plat(rng, 3, 10).word()));
    for (int sign : {1, -1}) {
      const auto s = stabilize(p, sign);
      CHECK(s.strands() == p.strands() + 2);
      const auto back = destabilize_syntactic(s);
      REQUIRE(back.has_value());
      CHECK(*back == p);
    }
  }
}

TEST_CASE("syntactic destabilization needs the last index to appear once at the end") {
  CHECK(destabilize_syntactic(plat(4, {1, 2})) == plat(2, {1}));
  CHECK_FALSE(destabilize_syntactic(plat(4, {2, 1, 2})).has_value());
  CHECK_FALSE(destabilize_syntactic(plat(4, {1})).has_value());
  CHECK_THROWS_AS(destabilize_syntactic(plat(2, {1})), Error);
}

TEST_CASE("flip is an involution and preserves the certificate") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = testing::random_plat(rng, 3, 10);
    CHECK(flip(flip(p)) == p);
    CHECK(certificate(flip(p)) == certificate(p));
  }
  CHECK(flip(plat(4, {1, 2, -3})).word().as_signed() == std::vector<int>{-1, 2, 3});
}

TEST_CASE("pocket moves decompose into catalog generators") {
  const auto p = plat(6, {2, 4, 1, 3, 1});
  const std::vector<PocketStep> path{{Direction::right, Layer::over}, {Direction::right, Layer::under}};
  const auto r = pocket_move(p, Side::top, 1, path);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0] == GeneratorUse{"cross_1", false});
  CHECK(r.trace[1] == GeneratorUse{"cross_2", true});
  CHECK(apply_move(p, Side::top, hilden_word(3, r.trace), r.trace) == r.plat);
  CHECK(certificate(r.plat) == certificate(p));
  const std::vector<PocketStep> off_edge{{Direction::left, Layer::over}};
  CHECK_THROWS_AS(pocket_move(p, Side::top, 1, off_edge), Error);
}

TEST_CASE("diagram orientation and writhe") {
  const auto d = diagram_of(plat(6, {2, 4, 1, 3, 1}));
  CHECK(d.crossings.size() == 5);
  CHECK(d.components.size() == 1);
  CHECK(writhe(d) == -1);
  CHECK(self_writhe(d) == -1);
  const auto trefoil = diagram_of(plat(4, {2, 2, 2}));
  CHECK(std::abs(writhe(trefoil)) == 3);
  const auto hopf = diagram_of(plat(4, {2, 2}));
  CHECK(self_writhe(hopf) == 0);
  CHECK(writhe(reorient(hopf, {false, true})) == -writhe(hopf));
}
