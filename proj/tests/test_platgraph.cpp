#include <doctest.h>

#include <algorithm>

#include "platkit/error.hpp"
#include "platkit/json.hpp"
#include "platkit/platgraph.hpp"
#include "platkit/search.hpp"

using namespace platkit;

namespace {
Plat plat(int strands, std::vector<int> letters) { return Plat(BraidWord::from_signed(strands, letters)); }

SearchBudget budget() {
  SearchBudget b;
  b.max_nodes = 100'000;
  b.max_seconds = 20;
  return b;
}

int count_level(const PlatGraph& g, int level) {
  return static_cast<int>(std::count_if(g.vertices.begin(), g.vertices.end(),
                                        [&](const PlatGraphVertex& v) { return v.bridge_level == level && v.resolved; }));
}
}  // namespace

TEST_CASE("unknot exploration is a path with one class per level") {
  const PlatGraph g = explore(plat(2, {}), 3, budget());
  CHECK(g.vertices.size() == 3);
  for (int level = 1; level <= 3; ++level) CHECK(count_level(g, level) == 1);
  CHECK(g.edges.size() == 2);
  CHECK(cycle_check(g).acyclic);
  CHECK(distance(g, 0, 0) == 0);
  CHECK(distance(g, 0, 1) == 1);
  CHECK(distance(g, 1, 2) == 1);
  CHECK(distance(g, 0, 2) == 2);
  const auto s = summarize(g);
  CHECK(s.dead_end_candidates == 0);
  for (auto [level, count] : s.unresolved_per_level) CHECK(count == 0);
  for (const auto& e : g.provenance) {
    if (e.kind == ProvenanceKind::merged) {
      REQUIRE(e.trace.has_value());
      CHECK(verify_trace(*e.trace));
    }
  }
}

TEST_CASE("every edge joins adjacent levels") {
  PlatGraph g;
  g.vertices.push_back({plat(2, {}), 1, certificate(plat(2, {})), 0});
  g.vertices.push_back({plat(4, {2}), 2, certificate(plat(4, {2})), 1});
  g.vertices.push_back({plat(6, {2, 4}), 3, certificate(plat(6, {2, 4})), 2});
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 2), Error);
  CHECK_THROWS_AS(g.vertex(7), Error);
  CHECK(distance(g, 0, 2) == std::nullopt);
  CHECK_THROWS_AS(distance(g, 0, 9), Error);
}

TEST_CASE("trefoil exploration populates levels 2 and 3, connected") {
  const PlatGraph g = explore(plat(4, {2, 2, 2}), 3, budget());
  CHECK(count_level(g, 2) >= 1);
  CHECK(count_level(g, 3) >= 1);
  CHECK(distance(g, 0, g.vertices.back().class_id).has_value());
  CHECK(cycle_check(g).acyclic);
}

TEST_CASE("explore preconditions") {
  CHECK_THROWS_AS(explore(plat(2, {}), 7, budget()), Error);
  CHECK_THROWS_AS(explore(plat(6, {}), 2, budget()), Error);
}

TEST_CASE("a corrupted graph with a duplicate merge shows a cycle") {
  PlatGraph g = explore(plat(2, {}), 3, budget());
  // Duplicate the level-2 class and wire it in beside the original.
  PlatGraphVertex dup = g.vertex(1);
  dup.class_id = static_cast<int>(g.vertices.size());
  g.vertices.push_back(dup);
  g.add_edge(0, dup.class_id);
  g.add_edge(dup.class_id, 2);
  const auto report = cycle_check(g);
  CHECK_FALSE(report.acyclic);
  REQUIRE(report.witness.size() >= 4);
  CHECK(report.witness.front() == report.witness.back());
  CHECK(report.contradiction);
}

TEST_CASE("single-vertex and empty graphs") {
  PlatGraph g;
  CHECK(cycle_check(g).acyclic);
  CHECK(to_dot(g).find("graph") != std::string::npos);
  g.vertices.push_back({plat(2, {}), 1, certificate(plat(2, {})), 0});
  CHECK(cycle_check(g).acyclic);
}

TEST_CASE("serializations are deterministic and round-trip") {
  const PlatGraph g = explore(plat(2, {}), 3, budget());
  const PlatGraph h = explore(plat(2, {}), 3, budget());
  CHECK(g == h);
  CHECK(to_dot(g) == to_dot(h));
  const std::string dot = to_dot(g);
  std::size_t ranks = 0;
  for (auto pos = dot.find("rank=same"); pos != std::string::npos; pos = dot.find("rank=same", pos + 1)) ++ranks;
  CHECK(ranks == 3);
  const Json j = to_json(g);
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(Json::parse(j.dump())) == g);
}
