#pragma once

// Braid words on m strands: parsing, free reduction, relation rewrites and the
// permutation image B_m -> S_m.
//
// Convention: letters act bottom to top. The first letter sits nearest the
// bottom cups of a plat, and in permutation_of it acts first.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace platkit {

/// σ_i^{±1}, stored as the signed integer ±i.
class BraidLetter {
 public:
  constexpr BraidLetter() = default;
  constexpr BraidLetter(int index, int sign) : value_(sign < 0 ? -index : index) {}
  static constexpr BraidLetter from_signed(int v) { return BraidLetter(v < 0 ? -v : v, v < 0 ? -1 : 1); }

  constexpr int index() const noexcept { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const noexcept { return value_ < 0 ? -1 : 1; }
  constexpr int as_signed() const noexcept { return value_; }
  constexpr BraidLetter inverse() const noexcept { return from_signed(-value_); }

  friend constexpr bool operator==(BraidLetter, BraidLetter) = default;
  friend constexpr auto operator<=>(BraidLetter, BraidLetter) = default;

 private:
  int value_ = 1;
};

class BraidWord {
 public:
  BraidWord() = default;
  /// Throws Error("precondition") if strands < 2 or a letter index >= strands.
  BraidWord(int strands, std::vector<BraidLetter> letters);
  static BraidWord from_signed(int strands, const std::vector<int>& letters);

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::vector<int> as_signed() const;
  int max_index() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 2;
  std::vector<BraidLetter> letters_;
};

/// 1-based permutation: images[i-1] is the image of point i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);
  /// The transposition (i i+1) on m points.
  static Permutation adjacent(int m, int i);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  /// x -> second(first(x)).
  static Permutation then(const Permutation& first, const Permutation& second);
  Permutation inverse() const;
  /// Cycle lengths, weakly decreasing, fixed points included.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Tokens are signed integers ("2", "-5") or generator notation ("s2", "s5^-1",
/// "s_5^{-1}"). An optional "strands=<m>;" header may precede them. When no
/// strand count is known it defaults to max index + 1 rounded up to even.
BraidWord parse_braid_word(std::string_view text, std::optional<int> strands = std::nullopt);

/// Canonical form: "strands=<m>; i1 i2 ...".
std::string to_text(const BraidWord& w);

BraidWord free_reduce(const BraidWord& w);
BraidWord invert(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
int exponent_sum(const BraidWord& w);
Permutation permutation_of(const BraidWord& w);

/// Same letters on more strands (the inclusion B_m -> B_{m'}).
BraidWord widen(const BraidWord& w, int strands);

enum class RewriteKind : std::uint8_t {
  commutation,   // σ_i^a σ_j^b = σ_j^b σ_i^a, |i - j| >= 2
  braid,         // σ_i^a σ_j^a σ_i^a = σ_j^a σ_i^a σ_j^a, |i - j| = 1
  conjugation,   // σ_i^a σ_j^b σ_i^-a = σ_j^-a σ_i^b σ_j^a, |i - j| = 1
  free_delete,   // σ_i^a σ_i^-a -> empty
  free_insert,   // empty -> σ_i^a σ_i^-a
};

/// One rewrite site: replace `from` at `position` by `to`.
struct Rewrite {
  RewriteKind kind;
  int position;
  std::vector<BraidLetter> from;
  std::vector<BraidLetter> to;
};

/// Every single-site rewrite of w. Free insertions use indices occurring in w
/// or adjacent to one (within 1..strands-1); pass include_insertions=false to skip them.
std::vector<Rewrite> enumerate_rewrites(const BraidWord& w, bool include_insertions = true);

/// Applies r to w; throws Error("precondition") if `from` does not match at `position`.
BraidWord apply_rewrite(const BraidWord& w, const Rewrite& r);

/// The distinct words one rewrite away from w, sorted.
std::vector<BraidWord> braid_rewrites(const BraidWord& w);

}  // namespace platkit
