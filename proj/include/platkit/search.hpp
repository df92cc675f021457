#pragma once

// Move search over Hilden double cosets: connect two plats with a replayable
// trace, or look for a hidden destabilization.
//
// Neither search is complete. Exhausted means the budget ran out, never that
// the plats are inequivalent.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "platkit/braid.hpp"
#include "platkit/invariants.hpp"
#include "platkit/plat.hpp"

namespace platkit {

enum class MoveKind { hilden_left, hilden_right, braid_relation, free_insert, free_delete };

std::string_view to_string(MoveKind k) noexcept;
MoveKind move_kind_from_string(std::string_view s);

/// One elementary step. hilden_left multiplies on the bottom (prepend),
/// hilden_right on the top (append); both free-reduce afterwards. The rewrite
/// kinds replace `from` by `to` at `position` literally.
struct Move {
  MoveKind kind = MoveKind::hilden_left;
  std::string generator;
  bool inverse = false;
  int position = 0;
  std::vector<BraidLetter> from;
  std::vector<BraidLetter> to;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Throws Error("precondition") when the move does not apply.
Plat replay_move(const Plat& p, const Move& m);
Move inverse_move(const Move& m);

struct MoveTrace {
  Plat start;
  std::vector<Move> moves;
  Plat end;
};

/// Replays every move from `start`, requires the result to equal `end`
/// exactly and the two endpoint certificates to agree.
bool verify_trace(const MoveTrace& t);

struct SearchBudget {
  std::size_t max_nodes = 1'000'000;
  /// Words longer than this are not generated; unset means input length + 8.
  std::optional<int> max_word_length;
  double max_seconds = 30.0;
};

/// Defaults, with PLATKIT_BUDGET_NODES overriding max_nodes when set.
SearchBudget default_budget();

struct SearchOptions {
  /// Every this many expansions the node's certificate is recomputed and
  /// compared with the root's (0 disables).
#ifdef NDEBUG
  std::size_t recheck_every = 100'000;
#else
  std::size_t recheck_every = 257;
#endif
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t expanded = 0;
  double seconds = 0.0;
  bool time_limit_hit = false;
  bool unidirectional_fallback = false;
};

enum class SearchStatus { found, exhausted, distinct_certificates };

std::string_view to_string(SearchStatus s) noexcept;

struct EquivalenceResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<MoveTrace> trace;
  std::string reason;  // set for distinct_certificates
  SearchStats stats;
};

/// Compares certificates first (a mismatch is a sound negative), then runs a
/// bidirectional best-first search ordered by reduced word length with a
/// lexicographic tie-break. Equal strand counts are required.
EquivalenceResult equivalence_search(const Plat& p1, const Plat& p2, const SearchBudget& budget,
                                     const SearchOptions& options = {});

struct DestabilizationResult {
  SearchStatus status = SearchStatus::exhausted;  // found or exhausted
  std::optional<Plat> smaller;
  /// From the input to the representative on which the syntactic destabilization applies.
  std::optional<MoveTrace> trace;
  SearchStats stats;
};

DestabilizationResult destabilization_search(const Plat& p, const SearchBudget& budget,
                                             const SearchOptions& options = {});

}  // namespace platkit
