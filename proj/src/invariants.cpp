#include "platkit/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "platkit/error.hpp"

namespace platkit {
namespace {

void require_even(const BraidWord& w) {
  if (w.strands() % 2 != 0) {
    throw Error("precondition", "plat invariants need an even number of strands, got " + std::to_string(w.strands()));
  }
}

}  // namespace

CosetType coset_type(const BraidWord& w) {
  require_even(w);
  const int m = w.strands();
  const Matching tau = Matching::standard(m);
  const Permutation pi = permutation_of(w);
  const Permutation pi_inv = pi.inverse();
  // πτπ⁻¹ pairs π(a) with π(b) for each standard pair (a, b).
  auto moved_partner = [&](int x) { return pi(tau.partner(pi_inv(x))); };

  std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
  CosetType out;
  for (int start = 1; start <= m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      int y = tau.partner(x);
      seen[static_cast<std::size_t>(y)] = true;
      x = moved_partner(y);
      length += 2;
    } while (x != start);
    out.parts.push_back(length / 2);
  }
  std::sort(out.parts.rbegin(), out.parts.rend());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Key = TLVector::Key;

Key set_pair(Key key, int a, int b) {
  key &= ~(Key{0xF} << (4 * a));
  key &= ~(Key{0xF} << (4 * b));
  key |= Key(static_cast<unsigned>(b)) << (4 * a);
  key |= Key(static_cast<unsigned>(a)) << (4 * b);
  return key;
}

Key standard_key(int points) {
  Key key = 0;
  for (int p = 0; p < points; p += 2) key = set_pair(key, p, p + 1);
  return key;
}

// this += scale * δ * p, with δ = -A² - A⁻².
void add_times_delta(LaurentPolynomial& target, const LaurentPolynomial& p, int shift) {
  target.add_shifted(p, shift + 2, -1);
  target.add_shifted(p, shift - 2, -1);
}

LaurentPolynomial delta_power(int k) {
  LaurentPolynomial out = LaurentPolynomial::constant(1, "A");
  const LaurentPolynomial delta = LaurentPolynomial::from_terms({{-2, -1}, {2, -1}}, "A");
  for (int i = 0; i < k; ++i) out *= delta;
  return out;
}

}  // namespace

TLVector TLVector::standard(int points) {
  if (points < 2 || points % 2 != 0 || points > 16) {
    throw Error("precondition", "Temperley-Lieb vectors support 2 to 16 points, even counts only");
  }
  TLVector v;
  v.points_ = points;
  v.entries_.emplace(standard_key(points), LaurentPolynomial::constant(1, "A"));
  return v;
}

void TLVector::apply(BraidLetter letter) {
  const int a = letter.index() - 1;
  const int b = letter.index();
  if (b >= points_) throw Error("precondition", "letter index out of range for the Temperley-Lieb vector");
  const int id_shift = letter.sign();   // A^{±1} on the identity smoothing
  const int e_shift = -letter.sign();   // A^{∓1} on e_i
  std::map<Key, LaurentPolynomial> next;
  auto slot = [&](Key k) -> LaurentPolynomial& { return next.try_emplace(k, LaurentPolynomial("A")).first->second; };
  for (const auto& [key, coeff] : entries_) {
    slot(key).add_shifted(coeff, id_shift);
    int pa = partner(key, a);
    if (pa == b) {
      add_times_delta(slot(key), coeff, e_shift);
    } else {
      int pb = partner(key, b);
      Key joined = set_pair(set_pair(key, a, b), pa, pb);
      slot(joined).add_shifted(coeff, e_shift);
    }
  }
  std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
  entries_ = std::move(next);
}

LaurentPolynomial TLVector::close() const {
  LaurentPolynomial total("A");
  std::vector<LaurentPolynomial> powers;
  for (const auto& [key, coeff] : entries_) {
    int loops = 0;
    std::vector<bool> seen(static_cast<std::size_t>(points_), false);
    for (int start = 0; start < points_; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++loops;
      int x = start;
      do {
        seen[static_cast<std::size_t>(x)] = true;
        int y = partner(key, x);
        seen[static_cast<std::size_t>(y)] = true;
        x = y ^ 1;  // standard cap partner
      } while (x != start);
    }
    while (static_cast<int>(powers.size()) < loops) powers.push_back(delta_power(static_cast<int>(powers.size())));
    total += coeff * powers[static_cast<std::size_t>(loops - 1)];
  }
  return total;
}

LaurentPolynomial kauffman_bracket_plat(const BraidWord& w) {
  require_even(w);
  TLVector v = TLVector::standard(w.strands());
  for (BraidLetter l : w.letters()) v.apply(l);
  return v.close();
}

LaurentPolynomial jones_plat(const BraidWord& w) {
  require_even(w);
  LaurentPolynomial bracket = kauffman_bracket_plat(w);
  int s = self_writhe(diagram_of(Plat(w)));
  // (-A)^(-3s)
  LaurentPolynomial factor = LaurentPolynomial::monomial((s % 2 == 0) ? 1 : -1, -3 * s, "A");
  return factor * bracket;
}

LaurentPolynomial jones_in_t(const LaurentPolynomial& jones_a) {
  std::map<int, Coeff> terms;
  for (auto [e, c] : jones_a.terms()) {
    if (e % 4 != 0) throw Error("precondition", "exponent " + std::to_string(e) + " is not a multiple of 4");
    terms[-e / 4] = c;
  }
  return LaurentPolynomial::from_terms(terms, "t");
}

std::int64_t determinant_from_jones(const LaurentPolynomial& jones_a) {
  const std::complex<double> a = std::polar(1.0, std::numbers::pi / 4);
  return static_cast<std::int64_t>(std::llround(std::abs(jones_a.evaluate(a))));
}

// ---------------------------------------------------------------------------

std::vector<LaurentPolynomial> fox_row(const FreeWord& relator, int generators) {
  std::vector<LaurentPolynomial> row(static_cast<std::size_t>(generators), LaurentPolynomial("t"));
  int prefix = 0;  // abelianised exponent of the prefix
  for (auto [gen, e] : relator) {
    if (gen < 0 || gen >= generators) throw Error("precondition", "Fox derivative generator out of range");
    if (e > 0) {
      // ∂(u x v)/∂x contributes u
      row[static_cast<std::size_t>(gen)].add_shifted(LaurentPolynomial::constant(1, "t"), prefix, 1);
      prefix += 1;
    } else {
      // ∂(u x⁻¹ v)/∂x contributes -u x⁻¹
      row[static_cast<std::size_t>(gen)].add_shifted(LaurentPolynomial::constant(1, "t"), prefix - 1, -1);
      prefix -= 1;
    }
  }
  return row;
}

WirtingerPresentation wirtinger(const PlatDiagram& d) {
  const int m = d.strands();
  const std::size_t L = d.crossings.size();
  auto key = [m](int level, int pos) { return static_cast<std::size_t>(level * m + pos - 1); };

  std::vector<std::size_t> parent((L + 1) * static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Consecutive segments of a component share an arc unless they meet at an
  // undercrossing.
  for (const auto& comp : d.components) {
    for (std::size_t j = 0; j < comp.size(); ++j) {
      const SegmentVisit& a = comp[j];
      const SegmentVisit& b = comp[(j + 1) % comp.size()];
      bool through_crossing = a.level != b.level;
      if (through_crossing) {
        const int lower_level = std::min(a.level, b.level);
        const int lower_pos = a.level < b.level ? a.position : b.position;
        const DiagramCrossing& c = d.crossings[static_cast<std::size_t>(lower_level)];
        const bool involved = lower_pos == c.position || lower_pos == c.position + 1;
        const bool rising = lower_pos == c.position;
        const bool over = !involved || (c.sign > 0) == rising;
        if (!over) continue;
      }
      parent[find(key(a.level, a.position))] = find(key(b.level, b.position));
    }
  }

  std::vector<int> arc_of(parent.size(), -1);
  int arcs = 0;
  for (const auto& comp : d.components) {
    for (const SegmentVisit& v : comp) {
      std::size_t root = find(key(v.level, v.position));
      if (arc_of[root] < 0) arc_of[root] = arcs++;
    }
  }
  auto arc = [&](int level, int pos) { return arc_of[find(key(level, pos))]; };

  WirtingerPresentation pres;
  pres.generators = arcs;
  const std::vector<int> signs = oriented_signs(d);
  for (std::size_t k = 0; k < L; ++k) {
    const DiagramCrossing& c = d.crossings[k];
    const int h = c.height;
    const CrossingPassages& pass = d.passages[k];
    // Rising passage: (h-1, i) -> (h, i+1). Falling: (h-1, i+1) -> (h, i).
    const bool rising_over = c.sign > 0;
    int over = rising_over ? arc(h - 1, c.position) : arc(h - 1, c.position + 1);
    int under_low = rising_over ? arc(h - 1, c.position + 1) : arc(h - 1, c.position);
    int under_high = rising_over ? arc(h, c.position) : arc(h, c.position + 1);
    bool under_up = rising_over ? pass.falling_upward : pass.rising_upward;
    int in = under_up ? under_low : under_high;
    int out = under_up ? under_high : under_low;
    int e = signs[k];
    pres.relators.push_back({{over, e}, {in, 1}, {over, -e}, {out, -1}});
  }
  return pres;
}

PolyMatrix alexander_matrix(const WirtingerPresentation& w) {
  PolyMatrix m(static_cast<int>(w.relators.size()), w.generators);
  for (std::size_t r = 0; r < w.relators.size(); ++r) {
    auto row = fox_row(w.relators[r], w.generators);
    for (int c = 0; c < w.generators; ++c) m.at(static_cast<int>(r), c) = std::move(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

LaurentPolynomial alexander_oriented(const PlatDiagram& d) {
  const WirtingerPresentation pres = wirtinger(d);
  const int rows = static_cast<int>(pres.relators.size());
  const int cols = pres.generators - 1;
  if (cols < 0 || rows < cols) return LaurentPolynomial("t");
  PolyMatrix a = alexander_matrix(pres).without(-1, 0);
  if (rows == cols) return determinant(std::move(a)).unit_normalized();
  // rows == cols + 1: one relator is redundant. A single minor suffices for
  // knots; for links take the gcd over every deleted row.
  const bool knot = d.components.size() == 1;
  LaurentPolynomial g("t");
  for (int r = rows - 1; r >= 0; --r) {
    g = gcd(g, determinant(a.without(r, -1)));
    if (knot && !g.is_zero()) break;
  }
  return g.unit_normalized().renamed("t");
}

LaurentPolynomial alexander_plat(const Plat& p) {
  const PlatDiagram d = diagram_of(p);
  const std::size_t c = d.components.size();
  if (c <= 1) return alexander_oriented(d);
  LaurentPolynomial best;
  bool have = false;
  for (std::uint32_t mask = 0; mask < (1u << (c - 1)); ++mask) {
    std::vector<bool> reverse(c, false);
    for (std::size_t i = 1; i < c; ++i) reverse[i] = (mask >> (i - 1)) & 1u;
    LaurentPolynomial v = alexander_oriented(reorient(d, reverse));
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best.renamed("t");
}

// ---------------------------------------------------------------------------

namespace {

LaurentPolynomial tpow(Coeff c, int e) { return LaurentPolynomial::monomial(c, e, "t"); }

// Right-multiplies m in place by the Burau image of one letter.
void apply_burau_letter(PolyMatrix& m, BraidLetter l, bool reduced, int strands) {
  const int i = l.index();
  // Block G on the affected columns, as (row, col, entry) with 0-based indices.
  struct Entry { int r, c; LaurentPolynomial v; };
  std::vector<Entry> block;
  std::vector<int> cols;
  if (!reduced) {
    const int a = i - 1, b = i;
    cols = {a, b};
    if (l.sign() > 0) {
      block = {{a, a, tpow(1, 0) - tpow(1, 1)}, {a, b, tpow(1, 1)}, {b, a, tpow(1, 0)}};
    } else {
      block = {{a, b, tpow(1, 0)}, {b, a, tpow(1, -1)}, {b, b, tpow(1, 0) - tpow(1, -1)}};
    }
  } else {
    // 3x3 block centred on coordinate i (1-based) of the (m-1)-dim space,
    // truncated at the edges.
    const int lo = i - 2, mid = i - 1, hi = i;  // 0-based
    std::vector<Entry> full;
    if (l.sign() > 0) {
      full = {{lo, lo, tpow(1, 0)}, {mid, lo, tpow(1, 1)}, {mid, mid, tpow(-1, 1)}, {mid, hi, tpow(1, 0)}, {hi, hi, tpow(1, 0)}};
    } else {
      full = {{lo, lo, tpow(1, 0)}, {mid, lo, tpow(1, 0)}, {mid, mid, tpow(-1, -1)}, {mid, hi, tpow(1, -1)}, {hi, hi, tpow(1, 0)}};
    }
    const int dim = strands - 1;
    for (auto& e : full) {
      if (e.r >= 0 && e.r < dim && e.c >= 0 && e.c < dim) block.push_back(e);
    }
    for (int c : {lo, mid, hi}) {
      if (c >= 0 && c < dim) cols.push_back(c);
    }
  }
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<LaurentPolynomial> updated(cols.size(), LaurentPolynomial("t"));
    for (const auto& e : block) {
      const LaurentPolynomial& x = m.at(r, e.r);
      if (x.is_zero()) continue;
      auto slot = std::find(cols.begin(), cols.end(), e.c) - cols.begin();
      updated[static_cast<std::size_t>(slot)] += x * e.v;
    }
    for (std::size_t k = 0; k < cols.size(); ++k) m.at(r, cols[k]) = std::move(updated[k]);
  }
}

}  // namespace

PolyMatrix burau(const BraidWord& w, bool reduced) {
  const int dim = reduced ? w.strands() - 1 : w.strands();
  PolyMatrix m = PolyMatrix::identity(dim, "t");
  for (BraidLetter l : w.letters()) apply_burau_letter(m, l, reduced, w.strands());
  return m;
}

LaurentPolynomial burau_cupcap_probe(const BraidWord& w) {
  require_even(w);
  const PolyMatrix b = burau(w, false);
  const int n = w.strands() / 2;
  PolyMatrix paired(n, n);
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) paired.at(a, c) = b.at(2 * a, 2 * c) - b.at(2 * a, 2 * c + 1);
  }
  return determinant(std::move(paired)).unit_normalized().renamed("t");
}

std::vector<ProbeInvariance> burau_probe_invariance(int n, int max_length) {
  const HildenCatalog cat = hilden_generators(n);
  const int m = 2 * n;
  std::vector<BraidWord> words{BraidWord(m, {})};
  for (std::size_t start = 0; start < words.size(); ++start) {
    if (static_cast<int>(words[start].size()) >= max_length) continue;
    for (int idx = 1; idx < m; ++idx) {
      for (int s : {1, -1}) {
        std::vector<BraidLetter> next = words[start].letters();
        next.emplace_back(idx, s);
        words.emplace_back(m, std::move(next));
      }
    }
  }
  std::vector<ProbeInvariance> report;
  for (const auto& g : cat.generators) {
    for (Side side : {Side::bottom, Side::top}) {
      for (bool inverse : {false, true}) {
        ProbeInvariance row{g.name, side, inverse, true, 0, 0};
        const BraidWord gw = inverse ? invert(g.word) : g.word;
        for (const auto& w : words) {
          BraidWord moved = side == Side::bottom ? concat(gw, w) : concat(w, gw);
          ++row.words_checked;
          if (burau_cupcap_probe(moved) != burau_cupcap_probe(w)) ++row.failures;
        }
        row.invariant = row.failures == 0;
        report.push_back(row);
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

InvariantCertificate certificate(const Plat& p) {
  InvariantCertificate c;
  c.components = component_count(p);
  c.coset_type = coset_type(p.word());
  c.jones = jones_plat(p.word());
  c.alexander = alexander_plat(p);
  return c;
}

std::string certificate_difference(const InvariantCertificate& a, const InvariantCertificate& b) {
  std::ostringstream out;
  if (a.components != b.components) {
    out << "component counts differ (" << a.components << " vs " << b.components << ")";
  } else if (a.coset_type != b.coset_type) {
    out << "coset types differ";
  } else if (a.jones != b.jones) {
    out << "Jones polynomials differ (" << a.jones.to_string() << " vs " << b.jones.to_string() << ")";
  } else if (a.alexander != b.alexander) {
    out << "Alexander polynomials differ (" << a.alexander.to_string() << " vs " << b.alexander.to_string() << ")";
  }
  return out.str();
}

}  // namespace platkit
