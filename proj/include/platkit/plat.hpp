#pragma once

// Plat closures of braid words on 2n strands, the Hilden move catalog, and the
// moves that preserve link type: bridge moves, (de)stabilization, pocket moves
// and the flip.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "platkit/braid.hpp"

namespace platkit {

/// Perfect matching of {1..points}.
class Matching {
 public:
  explicit Matching(std::vector<int> partner);
  /// {(1,2), (3,4), ...}
  static Matching standard(int points);

  int points() const noexcept { return static_cast<int>(partner_.size()); }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point - 1)]; }
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> partner_;
};

class Plat {
 public:
  /// Throws Error("precondition") on an odd strand count.
  explicit Plat(BraidWord word);

  const BraidWord& word() const noexcept { return word_; }
  int strands() const noexcept { return word_.strands(); }
  int bridges() const noexcept { return word_.strands() / 2; }
  const Matching& top() const noexcept { return top_; }
  const Matching& bottom() const noexcept { return bottom_; }

  friend bool operator==(const Plat&, const Plat&) = default;

 private:
  BraidWord word_;
  Matching top_;
  Matching bottom_;
};

Plat plat_closure(const BraidWord& w);

/// Number of link components, from the endpoint graph of cups, braid strands and caps.
int component_count(const Plat& p);

// ---------------------------------------------------------------------------
// Hilden catalog

struct HildenGenerator {
  std::string name;
  BraidWord word;
};

struct HildenCatalog {
  int n = 1;
  std::vector<HildenGenerator> generators;

  /// Throws Error("not_found") for an unknown name.
  const HildenGenerator& find(std::string_view name) const;
};

/// σ_1 ("sigma1"), odd twists σ_{2i-1} for 2 <= i <= n ("twist_i"),
/// σ_2σ_1²σ_2 ("slide_1") and σ_{2i}σ_{2i-1}σ_{2i+1}σ_{2i} for 1 <= i < n ("cross_i").
HildenCatalog hilden_generators(int n);

enum class Side { top, bottom };

std::string_view to_string(Side s) noexcept;
Side side_from_string(std::string_view s);

/// A catalog generator, possibly inverted.
struct GeneratorUse {
  std::string name;
  bool inverse = false;

  friend bool operator==(const GeneratorUse&, const GeneratorUse&) = default;
};

/// Bottom prepends g^{±1}, top appends it; the result is free-reduced.
Plat apply_move(const Plat& p, Side side, std::string_view generator, bool inverse = false);

/// Applies an explicit Hilden word g, accepted only when it equals the product
/// of `trace` (after free reduction).
Plat apply_move(const Plat& p, Side side, const BraidWord& g, std::span<const GeneratorUse> trace, bool inverse = false);

/// Product of catalog generators on 2n strands, in order.
BraidWord hilden_word(int n, std::span<const GeneratorUse> trace);

/// Adds a strand pair at the right edge and appends σ_{2n}^{sign}.
Plat stabilize(const Plat& p, int sign = 1);

/// Succeeds when the free-reduced word is ι(w')·σ_{2n-2}^{±1} with w' on
/// indices <= 2n-3. Requires at least 4 strands.
std::optional<Plat> destabilize_syntactic(const Plat& p);

// ---------------------------------------------------------------------------
// Pocket moves

enum class Direction { left, right };
enum class Layer { over, under };

struct PocketStep {
  Direction direction;
  Layer layer;
};

struct PocketResult {
  Plat plat;
  std::vector<GeneratorUse> trace;
};

/// Drags bridge `bridge` (1-based) on `side` one bridge position per step.
/// Moving right over the neighbour is cross_j; under is its inverse. Each step
/// becomes one catalog generator in the returned trace.
PocketResult pocket_move(const Plat& p, Side side, int bridge, std::span<const PocketStep> path);

/// Rotation of the diagram by π: letters reversed, σ_i -> σ_{2n-i}, signs kept.
Plat flip(const Plat& p);

// ---------------------------------------------------------------------------
// Diagram extraction

struct DiagramCrossing {
  int position;  // i of σ_i
  int sign;      // letter sign
  int height;    // 1-based, word order
};

/// Piece of strand at `position` between crossing heights `level` and `level + 1`.
/// Level 0 touches the bottom cups, level == crossing count touches the top caps.
struct SegmentVisit {
  int level;
  int position;
  bool upward;
};

/// Both passages through one crossing. The rising passage runs from position
/// i at the bottom to i+1 at the top; it is the over strand for a positive letter.
struct CrossingPassages {
  int rising_component;
  int falling_component;
  bool rising_upward;
  bool falling_upward;
};

struct PlatDiagram {
  int n_bridges = 1;
  std::vector<DiagramCrossing> crossings;
  /// Closed components, each a cyclic sequence of segment visits in traversal order.
  std::vector<std::vector<SegmentVisit>> components;
  std::vector<CrossingPassages> passages;

  int strands() const noexcept { return 2 * n_bridges; }
};

/// Components are numbered by their lowest bottom position and traversed
/// upward from it.
PlatDiagram diagram_of(const Plat& p);

/// Reverses the traversal direction of the listed components.
PlatDiagram reorient(const PlatDiagram& d, const std::vector<bool>& reverse);

/// Sign of each crossing under the diagram's orientation.
std::vector<int> oriented_signs(const PlatDiagram& d);

/// Sum of oriented signs over all crossings.
int writhe(const PlatDiagram& d);

/// Sum of oriented signs over crossings of a component with itself; does not
/// depend on how components are oriented.
int self_writhe(const PlatDiagram& d);

}  // namespace platkit
