#pragma once

// Invariants of plat closures that are constant on Hilden double cosets.
//
// Skein convention, fixed here and nowhere else: σ_i -> A·id + A^-1·e_i and
// σ_i^-1 -> A^-1·id + A·e_i, loop value δ = -A² - A^-2. Geometrically a
// positive letter carries the strand from position i (below) to i+1 (above)
// over the other strand.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "platkit/braid.hpp"
#include "platkit/laurent.hpp"
#include "platkit/matrix.hpp"
#include "platkit/plat.hpp"

namespace platkit {

/// Partition of the bridge count, weakly decreasing.
struct CosetType {
  std::vector<int> parts;

  friend bool operator==(const CosetType&, const CosetType&) = default;
};

/// Half-lengths of the cycles of τ ∪ πτπ⁻¹, where τ is the standard matching
/// and π the permutation of w.
CosetType coset_type(const BraidWord& w);

// ---------------------------------------------------------------------------
// Temperley-Lieb evaluation

/// Linear combination of noncrossing matchings on up to 16 points. A matching
/// is packed 4 bits per point: nibble k holds the partner of point k (0-based).
class TLVector {
 public:
  using Key = std::uint64_t;

  /// The standard matching with coefficient 1.
  static TLVector standard(int points);

  int points() const noexcept { return points_; }
  const std::map<Key, LaurentPolynomial>& entries() const noexcept { return entries_; }

  /// Multiplies by the skein image of one letter.
  void apply(BraidLetter letter);

  /// Pairs against the standard cap matching; each matching closing into
  /// `loops` circles contributes δ^(loops-1).
  LaurentPolynomial close() const;

  static int partner(Key key, int point) noexcept { return static_cast<int>((key >> (4 * point)) & 0xF); }

 private:
  int points_ = 2;
  std::map<Key, LaurentPolynomial> entries_;
};

/// Kauffman bracket of the plat closure, normalised so the crossingless
/// unknot evaluates to 1.
LaurentPolynomial kauffman_bracket_plat(const BraidWord& w);

/// (-A)^(-3·s)·<D>, where s is the self-writhe of the plat diagram: the sum of
/// oriented crossing signs over crossings of a component with itself. For a
/// knot s is the writhe and this is the Jones polynomial in A (t = A^-4). For
/// links it drops the linking-number factor, which makes the value independent
/// of component orientations.
LaurentPolynomial jones_plat(const BraidWord& w);

/// Replaces A by t^(-1/4); throws if an exponent is not divisible by 4.
LaurentPolynomial jones_in_t(const LaurentPolynomial& jones_a);

// ---------------------------------------------------------------------------
// Alexander polynomial through Fox calculus

/// Relator of a free group on arc generators, as (generator, ±1) letters.
using FreeWord = std::vector<std::pair<int, int>>;

/// Fox derivatives of `relator` with every generator sent to t; one entry per generator.
std::vector<LaurentPolynomial> fox_row(const FreeWord& relator, int generators);

struct WirtingerPresentation {
  int generators = 0;            // Wirtinger arcs
  std::vector<FreeWord> relators;  // one per crossing
};

/// Arcs run between undercrossings. Relator at a crossing with oriented sign ε:
/// x_over^ε · x_in · x_over^-ε · x_out^-1.
WirtingerPresentation wirtinger(const PlatDiagram& d);

/// Alexander matrix of a presentation with every generator sent to t.
PolyMatrix alexander_matrix(const WirtingerPresentation& w);

/// Alexander polynomial for the diagram's orientation: first column deleted,
/// gcd of the maximal minors; unit-normalized. Zero for split diagrams.
LaurentPolynomial alexander_oriented(const PlatDiagram& d);

/// For knots, alexander_oriented of the diagram. For links, the least value
/// (in LaurentPolynomial order) over all relative orientations of the components.
LaurentPolynomial alexander_plat(const Plat& p);

// ---------------------------------------------------------------------------
// Burau

/// Product of Burau images in word order. Unreduced σ_i acts on coordinates
/// i, i+1 by [[1-t, t], [1, 0]]; the reduced form is (m-1) x (m-1).
PolyMatrix burau(const BraidWord& w, bool reduced = false);

/// Experimental: det(Vᵀ·B·U), B the unreduced Burau matrix, U the 2n x n matrix
/// with columns e_{2j-1} - e_{2j}, V the one with columns e_{2j-1}. Unit-normalized.
/// Not part of the certificate.
LaurentPolynomial burau_cupcap_probe(const BraidWord& w);

struct ProbeInvariance {
  std::string generator;
  Side side;
  bool inverse;
  bool invariant;   // held on every sampled word
  int words_checked;
  int failures;
};

/// Checks probe(g·w) == probe(w) (or w·g) for every catalog generator, side
/// and sign over all words on 2n strands of length <= max_length.
std::vector<ProbeInvariance> burau_probe_invariance(int n, int max_length);

// ---------------------------------------------------------------------------
// Certificates

struct InvariantCertificate {
  int components = 1;
  CosetType coset_type;
  LaurentPolynomial jones;        // in A
  LaurentPolynomial alexander;    // in t, unit-normalized

  friend bool operator==(const InvariantCertificate&, const InvariantCertificate&) = default;
};

InvariantCertificate certificate(const Plat& p);

/// Human-readable reason two certificates differ, empty if they are equal.
std::string certificate_difference(const InvariantCertificate& a, const InvariantCertificate& b);

/// |V(-1)| from the Jones value in A, evaluated at A = e^{iπ/4}.
std::int64_t determinant_from_jones(const LaurentPolynomial& jones_a);

}  // namespace platkit
