#pragma once

// Bounded exploration of the plat graph of a link: vertices approximate
// Hilden double coset classes at each bridge level, edges are single
// (de)stabilizations.
//
// Vertices are certificate classes refined by witnessed connectivity. The
// provenance log keeps the three outcomes apart: proved same (a verifying
// trace), proved different (certificates differ) and unresolved.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "platkit/invariants.hpp"
#include "platkit/plat.hpp"
#include "platkit/search.hpp"

namespace platkit {

struct PlatGraphVertex {
  Plat representative;
  int bridge_level = 1;
  InvariantCertificate certificate;
  int class_id = 0;
  /// False when a certificate-equal vertex on the same level could not be
  /// connected to this one within budget.
  bool resolved = true;
  /// Destabilization search ran out of budget on this vertex.
  bool dead_end_candidate = false;

  friend bool operator==(const PlatGraphVertex&, const PlatGraphVertex&) = default;
};

enum class ProvenanceKind { seed, new_class, merged, distinct, unresolved, destabilized, dead_end_candidate };

std::string_view to_string(ProvenanceKind k) noexcept;
ProvenanceKind provenance_kind_from_string(std::string_view s);

struct ProvenanceEntry {
  ProvenanceKind kind = ProvenanceKind::seed;
  int vertex = 0;
  int other = -1;
  std::string note;
  std::optional<MoveTrace> trace;  // for merged / destabilized

  friend bool operator==(const ProvenanceEntry& a, const ProvenanceEntry& b) {
    return a.kind == b.kind && a.vertex == b.vertex && a.other == b.other && a.note == b.note &&
           a.trace.has_value() == b.trace.has_value() &&
           (!a.trace || (a.trace->start == b.trace->start && a.trace->moves == b.trace->moves && a.trace->end == b.trace->end));
  }
};

struct PlatGraph {
  std::vector<PlatGraphVertex> vertices;  // indexed by class_id
  std::set<std::pair<int, int>> edges;    // (smaller id, larger id)
  std::vector<ProvenanceEntry> provenance;
  SearchBudget budget;
  int max_level = 1;

  /// Throws Error("precondition") unless the endpoints sit on adjacent bridge levels.
  void add_edge(int a, int b);
  const PlatGraphVertex& vertex(int id) const;

  friend bool operator==(const PlatGraph& a, const PlatGraph& b) {
    return a.vertices == b.vertices && a.edges == b.edges && a.provenance == b.provenance &&
           a.budget.max_nodes == b.budget.max_nodes && a.budget.max_word_length == b.budget.max_word_length &&
           a.budget.max_seconds == b.budget.max_seconds && a.max_level == b.max_level;
  }
};

struct ExploreOptions {
  int level_cap = 6;
  /// Extra candidates per vertex: stabilizations of Hilden-scrambled representatives.
  int scrambles = 2;
  int scramble_moves = 3;
  std::uint32_t seed = 0x5eed;
};

/// Stabilizes from the seed's level up to max_level, merging candidates into
/// existing vertices when equivalence_search finds a trace.
PlatGraph explore(const Plat& seed, int max_level, const SearchBudget& budget, const ExploreOptions& options = {});

/// Shortest path length in edges, or nullopt when unreachable.
std::optional<int> distance(const PlatGraph& g, int from, int to);

struct CycleReport {
  bool acyclic = true;
  std::vector<int> witness;    // closed walk v0 ... v0 when a cycle exists
  bool contradiction = false;  // a cycle in the graph of a knot
};

/// Looks for a cycle among resolved vertices.
CycleReport cycle_check(const PlatGraph& g);

struct GraphSummary {
  std::vector<std::pair<int, int>> resolved_per_level;    // (level, count)
  std::vector<std::pair<int, int>> unresolved_per_level;  // (level, count)
  int dead_end_candidates = 0;
};

GraphSummary summarize(const PlatGraph& g);

/// DOT with one rank=same group per bridge level, ordered by (level, id).
std::string to_dot(const PlatGraph& g);

}  // namespace platkit
