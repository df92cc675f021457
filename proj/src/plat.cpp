#include "platkit/plat.hpp"

#include <algorithm>
#include <numeric>

#include "platkit/error.hpp"

namespace platkit {

Matching::Matching(std::vector<int> partner) : partner_(std::move(partner)) {
  const int m = static_cast<int>(partner_.size());
  for (int i = 1; i <= m; ++i) {
    int j = partner_[static_cast<std::size_t>(i - 1)];
    if (j < 1 || j > m || j == i || partner_[static_cast<std::size_t>(j - 1)] != i) {
      throw Error("precondition", "not a perfect matching");
    }
  }
}

Matching Matching::standard(int points) {
  if (points < 2 || points % 2 != 0) throw Error("precondition", "a standard matching needs an even point count");
  std::vector<int> partner(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) partner[static_cast<std::size_t>(i - 1)] = (i % 2 == 1) ? i + 1 : i - 1;
  return Matching(std::move(partner));
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= points(); ++i) {
    if (partner(i) > i) out.emplace_back(i, partner(i));
  }
  return out;
}

namespace {

const BraidWord& require_even(const BraidWord& w) {
  if (w.strands() % 2 != 0) {
    throw Error("precondition", "a plat needs an even number of strands, got " + std::to_string(w.strands()));
  }
  return w;
}

}  // namespace

Plat::Plat(BraidWord word)
    : word_(require_even(word)), top_(Matching::standard(word.strands())), bottom_(Matching::standard(word.strands())) {}

Plat plat_closure(const BraidWord& w) { return Plat(w); }

int component_count(const Plat& p) {
  // Points 0..m-1 are bottom endpoints, m..2m-1 top endpoints.
  const int m = p.strands();
  std::vector<int> parent(static_cast<std::size_t>(2 * m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

  Permutation pi = permutation_of(p.word());
  for (int i = 1; i <= m; ++i) unite(i - 1, m + pi(i) - 1);
  for (auto [a, b] : p.bottom().pairs()) unite(a - 1, b - 1);
  for (auto [a, b] : p.top().pairs()) unite(m + a - 1, m + b - 1);
  int roots = 0;
  for (int x = 0; x < 2 * m; ++x) roots += find(x) == x ? 1 : 0;
  return roots;
}

const HildenGenerator& HildenCatalog::find(std::string_view name) const {
  for (const auto& g : generators) {
    if (g.name == name) return g;
  }
  throw Error("not_found", "no Hilden generator named '" + std::string(name) + "' for n = " + std::to_string(n));
}

HildenCatalog hilden_generators(int n) {
  if (n < 1) throw Error("precondition", "the Hilden catalog needs n >= 1");
  const int m = 2 * n;
  HildenCatalog cat;
  cat.n = n;
  cat.generators.push_back({"sigma1", BraidWord::from_signed(m, {1})});
  for (int i = 2; i <= n; ++i) {
    cat.generators.push_back({"twist_" + std::to_string(i), BraidWord::from_signed(m, {2 * i - 1})});
  }
  if (n >= 2) cat.generators.push_back({"slide_1", BraidWord::from_signed(m, {2, 1, 1, 2})});
  for (int i = 1; i <= n - 1; ++i) {
    cat.generators.push_back(
        {"cross_" + std::to_string(i), BraidWord::from_signed(m, {2 * i, 2 * i - 1, 2 * i + 1, 2 * i})});
  }
  return cat;
}

std::string_view to_string(Side s) noexcept { return s == Side::top ? "top" : "bottom"; }

Side side_from_string(std::string_view s) {
  if (s == "top" || s == "right") return Side::top;
  if (s == "bottom" || s == "left") return Side::bottom;
  throw Error("parse", "side must be 'top' or 'bottom', got '" + std::string(s) + "'");
}

namespace {

Plat multiply(const Plat& p, Side side, const BraidWord& g) {
  BraidWord w = side == Side::bottom ? concat(g, p.word()) : concat(p.word(), g);
  return Plat(free_reduce(w));
}

}  // namespace

Plat apply_move(const Plat& p, Side side, std::string_view generator, bool inverse) {
  const HildenCatalog cat = hilden_generators(p.bridges());
  const BraidWord& g = cat.find(generator).word;
  return multiply(p, side, inverse ? invert(g) : g);
}

BraidWord hilden_word(int n, std::span<const GeneratorUse> trace) {
  const HildenCatalog cat = hilden_generators(n);
  BraidWord out(2 * n, {});
  for (const auto& use : trace) {
    const BraidWord& g = cat.find(use.name).word;
    out = concat(out, use.inverse ? invert(g) : g);
  }
  return out;
}

Plat apply_move(const Plat& p, Side side, const BraidWord& g, std::span<const GeneratorUse> trace, bool inverse) {
  if (g.strands() != p.strands()) throw Error("precondition", "Hilden word strand count does not match the plat");
  if (free_reduce(hilden_word(p.bridges(), trace)) != free_reduce(g)) {
    throw Error("precondition", "word is not the product of the supplied Hilden generators");
  }
  return multiply(p, side, inverse ? invert(g) : g);
}

Plat stabilize(const Plat& p, int sign) {
  const int m = p.strands();
  std::vector<BraidLetter> letters = p.word().letters();
  letters.emplace_back(m, sign < 0 ? -1 : 1);
  return Plat(BraidWord(m + 2, std::move(letters)));
}

std::optional<Plat> destabilize_syntactic(const Plat& p) {
  if (p.strands() < 4) throw Error("precondition", "destabilization needs at least 4 strands");
  const int m = p.strands();
  BraidWord w = free_reduce(p.word());
  if (w.empty() || w.letters().back().index() != m - 2) return std::nullopt;
  std::vector<BraidLetter> rest(w.letters().begin(), w.letters().end() - 1);
  for (BraidLetter l : rest) {
    if (l.index() > m - 3) return std::nullopt;
  }
  return Plat(BraidWord(m - 2, std::move(rest)));
}

PocketResult pocket_move(const Plat& p, Side side, int bridge, std::span<const PocketStep> path) {
  const int n = p.bridges();
  if (bridge < 1 || bridge > n) throw Error("precondition", "bridge " + std::to_string(bridge) + " out of range");
  PocketResult result{p, {}};
  int at = bridge;
  for (const PocketStep& step : path) {
    GeneratorUse use;
    if (step.direction == Direction::right) {
      if (at + 1 > n) throw Error("precondition", "pocket path leaves the strand range on the right");
      use = {"cross_" + std::to_string(at), step.layer == Layer::under};
      ++at;
    } else {
      if (at - 1 < 1) throw Error("precondition", "pocket path leaves the strand range on the left");
      // Bridge `at` passing over bridge at-1 is bridge at-1 passing under it.
      use = {"cross_" + std::to_string(at - 1), step.layer == Layer::over};
      --at;
    }
    result.plat = apply_move(result.plat, side, use.name, use.inverse);
    result.trace.push_back(std::move(use));
  }
  return result;
}

Plat flip(const Plat& p) {
  const int m = p.strands();
  std::vector<BraidLetter> out;
  out.reserve(p.word().size());
  for (auto it = p.word().letters().rbegin(); it != p.word().letters().rend(); ++it) {
    out.emplace_back(m - it->index(), it->sign());
  }
  return Plat(BraidWord(m, std::move(out)));
}

namespace {

struct SegmentTable {
  int strands;
  std::vector<int> component;  // by level * strands + (position - 1)
  std::vector<char> upward;

  std::size_t key(int level, int position) const {
    return static_cast<std::size_t>(level * strands + position - 1);
  }
};

SegmentTable tabulate(const PlatDiagram& d) {
  SegmentTable t{d.strands(), {}, {}};
  std::size_t cells = (d.crossings.size() + 1) * static_cast<std::size_t>(d.strands());
  t.component.assign(cells, -1);
  t.upward.assign(cells, 0);
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    for (const SegmentVisit& v : d.components[c]) {
      t.component[t.key(v.level, v.position)] = static_cast<int>(c);
      t.upward[t.key(v.level, v.position)] = v.upward ? 1 : 0;
    }
  }
  return t;
}

void rebuild_passages(PlatDiagram& d) {
  SegmentTable t = tabulate(d);
  d.passages.clear();
  for (const DiagramCrossing& c : d.crossings) {
    std::size_t rising = t.key(c.height - 1, c.position);
    std::size_t falling = t.key(c.height - 1, c.position + 1);
    d.passages.push_back({t.component[rising], t.component[falling], t.upward[rising] != 0, t.upward[falling] != 0});
  }
}

}  // namespace

PlatDiagram diagram_of(const Plat& p) {
  PlatDiagram d;
  d.n_bridges = p.bridges();
  const auto& letters = p.word().letters();
  const int L = static_cast<int>(letters.size());
  const int m = p.strands();
  for (int k = 0; k < L; ++k) {
    d.crossings.push_back({letters[static_cast<std::size_t>(k)].index(), letters[static_cast<std::size_t>(k)].sign(), k + 1});
  }

  std::vector<char> visited(static_cast<std::size_t>((L + 1) * m), 0);
  auto key = [m](int level, int pos) { return static_cast<std::size_t>(level * m + pos - 1); };

  for (int start = 1; start <= m; ++start) {
    if (visited[key(0, start)]) continue;
    std::vector<SegmentVisit> comp;
    SegmentVisit cur{0, start, true};
    do {
      visited[key(cur.level, cur.position)] = 1;
      comp.push_back(cur);
      if (cur.upward) {
        if (cur.level < L) {
          int i = letters[static_cast<std::size_t>(cur.level)].index();
          int pos = cur.position == i ? i + 1 : cur.position == i + 1 ? i : cur.position;
          cur = {cur.level + 1, pos, true};
        } else {
          cur = {L, p.top().partner(cur.position), false};
        }
      } else {
        if (cur.level > 0) {
          int i = letters[static_cast<std::size_t>(cur.level - 1)].index();
          int pos = cur.position == i + 1 ? i : cur.position == i ? i + 1 : cur.position;
          cur = {cur.level - 1, pos, false};
        } else {
          cur = {0, p.bottom().partner(cur.position), true};
        }
      }
    } while (!(cur.level == 0 && cur.position == start && cur.upward));
    d.components.push_back(std::move(comp));
  }
  rebuild_passages(d);
  return d;
}

PlatDiagram reorient(const PlatDiagram& d, const std::vector<bool>& reverse) {
  PlatDiagram out = d;
  for (std::size_t c = 0; c < out.components.size() && c < reverse.size(); ++c) {
    if (!reverse[c]) continue;
    auto& comp = out.components[c];
    std::reverse(comp.begin(), comp.end());
    for (auto& v : comp) v.upward = !v.upward;
  }
  rebuild_passages(out);
  return out;
}

std::vector<int> oriented_signs(const PlatDiagram& d) {
  std::vector<int> out;
  out.reserve(d.crossings.size());
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const auto& pass = d.passages[k];
    int rising = pass.rising_upward ? 1 : -1;
    int falling = pass.falling_upward ? 1 : -1;
    out.push_back(d.crossings[k].sign * rising * falling);
  }
  return out;
}

int writhe(const PlatDiagram& d) {
  auto signs = oriented_signs(d);
  return std::accumulate(signs.begin(), signs.end(), 0);
}

int self_writhe(const PlatDiagram& d) {
  auto signs = oriented_signs(d);
  int total = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (d.passages[k].rising_component == d.passages[k].falling_component) total += signs[k];
  }
  return total;
}

}  // namespace platkit
