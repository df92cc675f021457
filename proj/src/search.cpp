#include "platkit/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "platkit/error.hpp"

namespace platkit {

std::string_view to_string(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::hilden_left: return "hilden-left";
    case MoveKind::hilden_right: return "hilden-right";
    case MoveKind::braid_relation: return "braid-relation";
    case MoveKind::free_insert: return "free-insert";
    case MoveKind::free_delete: return "free-delete";
  }
  return "?";
}

MoveKind move_kind_from_string(std::string_view s) {
  for (MoveKind k : {MoveKind::hilden_left, MoveKind::hilden_right, MoveKind::braid_relation, MoveKind::free_insert,
                     MoveKind::free_delete}) {
    if (to_string(k) == s) return k;
  }
  throw Error("parse", "unknown move kind '" + std::string(s) + "'");
}

std::string_view to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::distinct_certificates: return "distinct-certificates";
  }
  return "?";
}

Plat replay_move(const Plat& p, const Move& m) {
  switch (m.kind) {
    case MoveKind::hilden_left: return apply_move(p, Side::bottom, m.generator, m.inverse);
    case MoveKind::hilden_right: return apply_move(p, Side::top, m.generator, m.inverse);
    case MoveKind::free_delete:
      if (m.from.size() != 2 || !m.to.empty() || m.from[1] != m.from[0].inverse()) {
        throw Error("precondition", "free deletion must remove a cancelling pair");
      }
      break;
    case MoveKind::free_insert:
      if (m.to.size() != 2 || !m.from.empty() || m.to[1] != m.to[0].inverse()) {
        throw Error("precondition", "free insertion must add a cancelling pair");
      }
      break;
    case MoveKind::braid_relation: {
      // Only the relations the rewriter knows are legal.
      BraidWord local(p.strands(), m.from);
      bool legal = false;
      for (const Rewrite& r : enumerate_rewrites(local, false)) {
        if (r.position == 0 && r.from.size() == m.from.size() && r.to == m.to &&
            r.kind != RewriteKind::free_delete) {
          legal = true;
          break;
        }
      }
      if (!legal) throw Error("precondition", "not a braid relation");
      break;
    }
  }
  RewriteKind kind = m.kind == MoveKind::free_delete  ? RewriteKind::free_delete
                     : m.kind == MoveKind::free_insert ? RewriteKind::free_insert
                                                       : RewriteKind::commutation;
  return Plat(apply_rewrite(p.word(), Rewrite{kind, m.position, m.from, m.to}));
}

Move inverse_move(const Move& m) {
  Move out = m;
  switch (m.kind) {
    case MoveKind::hilden_left:
    case MoveKind::hilden_right: out.inverse = !m.inverse; break;
    case MoveKind::braid_relation: std::swap(out.from, out.to); break;
    case MoveKind::free_insert:
      out.kind = MoveKind::free_delete;
      std::swap(out.from, out.to);
      break;
    case MoveKind::free_delete:
      out.kind = MoveKind::free_insert;
      std::swap(out.from, out.to);
      break;
  }
  return out;
}

bool verify_trace(const MoveTrace& t) {
  try {
    Plat cur = t.start;
    for (const Move& m : t.moves) cur = replay_move(cur, m);
    if (!(cur == t.end)) return false;
    return certificate(t.start) == certificate(t.end);
  } catch (const std::exception&) {
    return false;
  }
}

SearchBudget default_budget() {
  SearchBudget b;
  if (const char* env = std::getenv("PLATKIT_BUDGET_NODES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_nodes = static_cast<std::size_t>(v);
  }
  return b;
}

namespace {

// Search words are strings of signed letter values.
using Word = std::string;

Word encode(const BraidWord& w) {
  Word out;
  out.reserve(w.size());
  for (BraidLetter l : w.letters()) out.push_back(static_cast<char>(l.as_signed()));
  return out;
}

BraidWord decode(const Word& w, int strands) {
  std::vector<BraidLetter> letters;
  letters.reserve(w.size());
  for (char c : w) letters.push_back(BraidLetter::from_signed(static_cast<signed char>(c)));
  return BraidWord(strands, std::move(letters));
}

int idx(char c) { return std::abs(static_cast<int>(static_cast<signed char>(c))); }

void reduce_into(Word& out, std::string_view a, std::string_view b) {
  out.clear();
  for (std::string_view part : {a, b}) {
    for (char c : part) {
      if (!out.empty() && static_cast<signed char>(out.back()) == -static_cast<signed char>(c)) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
  }
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return static_cast<signed char>(x) < static_cast<signed char>(y);
  });
}

struct RewriteSite {
  int position;
  Word from;
  Word to;
};

// Relation sites of a reduced word: braid / conjugation triples by position.
// Search nodes are commutation normal forms, so commutation sites are not listed.
template <class F>
void for_each_relation(const Word& w, F&& f) {
  const int n = static_cast<int>(w.size());
  for (int p = 0; p + 2 < n; ++p) {
    auto x = static_cast<signed char>(w[static_cast<std::size_t>(p)]);
    auto y = static_cast<signed char>(w[static_cast<std::size_t>(p + 1)]);
    auto z = static_cast<signed char>(w[static_cast<std::size_t>(p + 2)]);
    if (std::abs(std::abs(x) - std::abs(y)) != 1 || std::abs(x) != std::abs(z)) continue;
    int sx = x < 0 ? -1 : 1, sy = y < 0 ? -1 : 1;
    int ix = std::abs(x), iy = std::abs(y);
    if (z == x && sx == sy) {
      f(RewriteSite{p, w.substr(static_cast<std::size_t>(p), 3), Word{static_cast<char>(y), static_cast<char>(x), static_cast<char>(y)}});
    } else if (z == -x) {
      f(RewriteSite{p, w.substr(static_cast<std::size_t>(p), 3),
                    Word{static_cast<char>(-sx * iy), static_cast<char>(sy * ix), static_cast<char>(sx * iy)}});
    }
  }
}

// Edge labels stored per node; expanded to Moves only on reconstruction.
struct Edge {
  enum Kind : std::uint8_t { root, hilden, relation } kind = root;
  std::uint16_t generator = 0;  // catalog index
  bool top = false;
  bool inverse = false;
  std::uint32_t site = 0;  // index in for_each_relation order
};

struct Node {
  Word word;
  std::int64_t parent;
  Edge edge;
};

struct Generators {
  std::vector<std::string> names;
  std::vector<Word> forward;
  std::vector<Word> backward;
};

Generators encode_catalog(int n) {
  Generators g;
  for (const auto& gen : hilden_generators(n).generators) {
    g.names.push_back(gen.name);
    g.forward.push_back(encode(gen.word));
    g.backward.push_back(encode(invert(gen.word)));
  }
  return g;
}

std::vector<BraidLetter> letters_of(const Word& w) {
  std::vector<BraidLetter> out;
  for (char c : w) out.push_back(BraidLetter::from_signed(static_cast<signed char>(c)));
  return out;
}

// Free deletions that take `w` to its reduced form, in application order.
std::vector<Move> reduction_moves(const Word& w) {
  std::vector<Move> moves;
  Word stack;
  for (char c : w) {
    if (!stack.empty() && static_cast<signed char>(stack.back()) == -static_cast<signed char>(c)) {
      Move m;
      m.kind = MoveKind::free_delete;
      m.position = static_cast<int>(stack.size()) - 1;
      m.from = letters_of(Word{stack.back(), c});
      moves.push_back(std::move(m));
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return moves;
}

bool commute(char a, char b) { return std::abs(idx(a) - idx(b)) >= 2; }

// Letter order of the normal form: by index, negative before positive.
bool key_less(char a, char b) {
  if (idx(a) != idx(b)) return idx(a) < idx(b);
  return static_cast<signed char>(a) < static_cast<signed char>(b);
}

void swap_adjacent(Word& w, std::size_t j, std::vector<Move>* moves) {
  if (moves) {
    Move m;
    m.kind = MoveKind::braid_relation;
    m.position = static_cast<int>(j);
    m.from = letters_of(Word{w[j], w[j + 1]});
    m.to = letters_of(Word{w[j + 1], w[j]});
    moves->push_back(std::move(m));
  }
  std::swap(w[j], w[j + 1]);
}

std::string twist_name(int index) { return index == 1 ? "sigma1" : "twist_" + std::to_string((index + 1) / 2); }

// Removes one odd letter that commutes to either end, where a cup or cap twist
// cancels it. Returns false when there is none.
bool strip_twist(Word& w, std::vector<Move>* moves) {
  const std::size_t n = w.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (idx(w[j]) % 2 == 0) continue;
    bool to_front = true;
    for (std::size_t i = 0; i < j && to_front; ++i) to_front = commute(w[i], w[j]);
    bool to_back = !to_front;
    for (std::size_t i = j + 1; i < n && to_back; ++i) to_back = commute(w[i], w[j]);
    if (!to_front && !to_back) continue;
    const bool positive = static_cast<signed char>(w[j]) > 0;
    Move m;
    m.generator = twist_name(idx(w[j]));
    m.inverse = positive;
    if (to_front) {
      for (std::size_t k = j; k > 0; --k) swap_adjacent(w, k - 1, moves);
      m.kind = MoveKind::hilden_left;
      w.erase(0, 1);
    } else {
      for (std::size_t k = j; k + 1 < n; ++k) swap_adjacent(w, k, moves);
      m.kind = MoveKind::hilden_right;
      w.pop_back();
    }
    if (moves) moves->push_back(std::move(m));
    return true;
  }
  return false;
}

// Canonical search node for a free-reduced word: takes the lexicographically
// least word of the commutation class and free-reduces until stable, then
// strips a twist that reaches either end and starts over. Each step is a legal
// move, so when `moves` is given the whole normalization is recorded.
//
// Stripping only happens at the fixpoint: there no letter is separated from
// its inverse by commuting letters, so every reordering stays reduced and the
// twist move cancels exactly one letter, which keeps it invertible.
void canonicalize(Word& w, std::vector<Move>* moves) {
  for (;;) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::size_t best = k;
      for (std::size_t j = k + 1; j < w.size(); ++j) {
        // w[j] can move to k only if it commutes with everything in w[k..j).
        bool free = true;
        for (std::size_t i = k; i < j && free; ++i) free = commute(w[i], w[j]);
        if (free && key_less(w[j], w[best])) best = j;
      }
      for (std::size_t j = best; j > k; --j) swap_adjacent(w, j - 1, moves);
    }
    std::vector<Move> deletions = reduction_moves(w);
    if (deletions.empty()) {
      if (strip_twist(w, moves)) continue;
      return;
    }
    Word reduced;
    reduce_into(reduced, w, {});
    w = std::move(reduced);
    if (moves) {
      for (Move& m : deletions) moves->push_back(std::move(m));
    }
  }
}

template <class F>
void for_each_neighbor(const Word& w, const Generators& gens, Word& scratch, F&& emit) {
  for (std::size_t gi = 0; gi < gens.names.size(); ++gi) {
    for (bool top : {false, true}) {
      for (bool inverse : {false, true}) {
        const Word& g = inverse ? gens.backward[gi] : gens.forward[gi];
        if (top) {
          reduce_into(scratch, w, g);
        } else {
          reduce_into(scratch, g, w);
        }
        canonicalize(scratch, nullptr);
        emit(Edge{Edge::hilden, static_cast<std::uint16_t>(gi), top, inverse, 0}, scratch);
      }
    }
  }
  std::uint32_t site = 0;
  for_each_relation(w, [&](const RewriteSite& s) {
    Word rewritten = w;
    rewritten.replace(static_cast<std::size_t>(s.position), s.from.size(), s.to);
    reduce_into(scratch, rewritten, {});
    canonicalize(scratch, nullptr);
    emit(Edge{Edge::relation, 0, false, false, site}, scratch);
    ++site;
  });
}

std::vector<Move> invert_moves(const std::vector<Move>& moves) {
  std::vector<Move> out;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.push_back(inverse_move(*it));
  return out;
}

// Moves taking a raw word to its canonical node.
std::vector<Move> normalizing_moves(const Word& raw, Word& canonical) {
  std::vector<Move> moves = reduction_moves(raw);
  reduce_into(canonical, raw, {});
  canonicalize(canonical, &moves);
  return moves;
}

// Moves realising one edge out of `parent`.
std::vector<Move> edge_moves(const Word& parent, const Edge& e, const Generators& gens) {
  std::vector<Move> out;
  Word next;
  if (e.kind == Edge::hilden) {
    Move m;
    m.kind = e.top ? MoveKind::hilden_right : MoveKind::hilden_left;
    m.generator = gens.names[e.generator];
    m.inverse = e.inverse;
    out.push_back(std::move(m));
    const Word& g = e.inverse ? gens.backward[e.generator] : gens.forward[e.generator];
    if (e.top) {
      reduce_into(next, parent, g);
    } else {
      reduce_into(next, g, parent);
    }
  } else if (e.kind == Edge::relation) {
    std::uint32_t site = 0;
    for_each_relation(parent, [&](const RewriteSite& s) {
      if (site++ != e.site) return;
      Move m;
      m.kind = MoveKind::braid_relation;
      m.position = s.position;
      m.from = letters_of(s.from);
      m.to = letters_of(s.to);
      out.push_back(std::move(m));
      Word rewritten = parent;
      rewritten.replace(static_cast<std::size_t>(s.position), s.from.size(), s.to);
      for (Move& d : reduction_moves(rewritten)) out.push_back(std::move(d));
      reduce_into(next, rewritten, {});
    });
  }
  canonicalize(next, &out);
  return out;
}

class Clock {
 public:
  explicit Clock(double limit) : start_(std::chrono::steady_clock::now()), limit_(limit) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  bool expired() const { return elapsed() > limit_; }

 private:
  std::chrono::steady_clock::time_point start_;
  double limit_;
};

// One search direction: node store, transposition table and open list.
class Frontier {
 public:
  explicit Frontier(const Word& root) : open_(Cmp{&nodes_}) {
    nodes_.push_back({root, -1, Edge{}});
    table_.emplace(std::string_view(nodes_.back().word), 0);
    open_.push(0);
  }

  Frontier(const Frontier&) = delete;
  Frontier& operator=(const Frontier&) = delete;

  bool empty() const { return open_.empty(); }
  std::size_t open_size() const { return open_.size(); }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::int64_t id) const { return nodes_[static_cast<std::size_t>(id)]; }

  std::int64_t pop() {
    std::int64_t id = open_.top();
    open_.pop();
    return id;
  }

  std::optional<std::int64_t> find(const Word& w) const {
    auto it = table_.find(std::string_view(w));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  /// Adds w unless already present; returns the new id.
  std::optional<std::int64_t> add(const Word& w, std::int64_t parent, const Edge& e) {
    if (table_.count(std::string_view(w)) != 0) return std::nullopt;
    nodes_.push_back({w, parent, e});
    auto id = static_cast<std::int64_t>(nodes_.size() - 1);
    table_.emplace(std::string_view(nodes_.back().word), id);
    open_.push(id);
    return id;
  }

  /// Edges from the root down to `id`, each with its parent's word.
  std::vector<std::pair<Word, Edge>> path_to(std::int64_t id) const {
    std::vector<std::pair<Word, Edge>> out;
    for (std::int64_t cur = id; node(cur).parent >= 0; cur = node(cur).parent) {
      out.emplace_back(node(node(cur).parent).word, node(cur).edge);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  struct Cmp {
    const std::deque<Node>* nodes;
    // priority_queue pops the greatest element, so "greater" means worse.
    bool operator()(std::int64_t a, std::int64_t b) const {
      const Word& wa = (*nodes)[static_cast<std::size_t>(a)].word;
      const Word& wb = (*nodes)[static_cast<std::size_t>(b)].word;
      if (word_less(wb, wa)) return true;
      if (word_less(wa, wb)) return false;
      return a > b;
    }
  };

  std::deque<Node> nodes_;  // stable addresses for the string_view keys
  std::unordered_map<std::string_view, std::int64_t> table_;
  std::priority_queue<std::int64_t, std::vector<std::int64_t>, Cmp> open_;
};

std::vector<Move> path_moves(const std::vector<std::pair<Word, Edge>>& path, const Generators& gens) {
  std::vector<Move> out;
  for (const auto& [parent, edge] : path) {
    for (Move& m : edge_moves(parent, edge, gens)) out.push_back(std::move(m));
  }
  return out;
}

void recheck(const Word& w, int strands, const InvariantCertificate& root) {
  if (!(certificate(Plat(decode(w, strands))) == root)) {
    throw std::logic_error("search neighbour changed the certificate: " + to_text(decode(w, strands)));
  }
}

}  // namespace

EquivalenceResult equivalence_search(const Plat& p1, const Plat& p2, const SearchBudget& budget,
                                     const SearchOptions& options) {
  if (p1.strands() != p2.strands()) {
    throw Error("precondition", "equivalence search needs equal strand counts (stabilize first)");
  }
  EquivalenceResult result;
  const Clock clock(budget.max_seconds);
  const InvariantCertificate c1 = certificate(p1);
  const InvariantCertificate c2 = certificate(p2);
  if (!(c1 == c2)) {
    result.status = SearchStatus::distinct_certificates;
    result.reason = certificate_difference(c1, c2);
    result.stats.seconds = clock.elapsed();
    return result;
  }

  const int strands = p1.strands();
  const Generators gens = encode_catalog(p1.bridges());
  const Word raw1 = encode(p1.word());
  const Word raw2 = encode(p2.word());
  Word start, goal;
  const std::vector<Move> to_start = normalizing_moves(raw1, start);
  const std::vector<Move> to_goal = normalizing_moves(raw2, goal);
  const std::size_t max_len = static_cast<std::size_t>(
      budget.max_word_length.value_or(static_cast<int>(std::max(raw1.size(), raw2.size())) + 8));

  Frontier forward(start), backward(goal);
  std::array<Frontier*, 2> side_ptrs{&forward, &backward};
  auto sides = [&](int k) -> Frontier& { return *side_ptrs[static_cast<std::size_t>(k)]; };
  std::array<bool, 2> active{true, true};
  const std::size_t side_cap = std::max<std::size_t>(1, budget.max_nodes / 2);

  auto finish = [&](std::int64_t id_a, std::int64_t id_b) {
    MoveTrace t{p1, to_start, p2};
    for (Move& m : path_moves(sides(0).path_to(id_a), gens)) t.moves.push_back(std::move(m));
    for (Move& m : invert_moves(path_moves(sides(1).path_to(id_b), gens))) t.moves.push_back(std::move(m));
    for (Move& m : invert_moves(to_goal)) t.moves.push_back(std::move(m));
    result.status = SearchStatus::found;
    result.trace = std::move(t);
  };

  if (start == goal) {
    finish(0, 0);
  } else {
    Word scratch;
    bool done = false;
    while (!done) {
      if (sides(0).size() + sides(1).size() >= budget.max_nodes) break;
      if (result.stats.expanded % 64 == 0 && clock.expired()) {
        result.stats.time_limit_hit = true;
        break;
      }
      for (int s = 0; s < 2; ++s) {
        if (active[s] && sides(s).size() > side_cap) {
          active[s] = false;
          result.stats.unidirectional_fallback = true;
        }
      }
      int s = -1;
      for (int k = 0; k < 2; ++k) {
        if (!active[k] || sides(k).empty()) continue;
        if (s < 0 || sides(k).open_size() < sides(s).open_size()) s = k;
      }
      if (s < 0) break;
      Frontier& own = sides(s);
      const Frontier& other = sides(1 - s);
      std::int64_t id = own.pop();
      const Word current = own.node(id).word;
      ++result.stats.expanded;
      if (options.recheck_every != 0 && result.stats.expanded % options.recheck_every == 0) {
        recheck(current, strands, c1);
      }
      for_each_neighbor(current, gens, scratch, [&](const Edge& e, const Word& next) {
        if (done || next.size() > max_len) return;
        auto added = own.add(next, id, e);
        if (!added) return;
        if (auto hit = other.find(next)) {
          if (s == 0) {
            finish(*added, *hit);
          } else {
            finish(*hit, *added);
          }
          done = true;
        }
      });
    }
  }
  result.stats.nodes = sides(0).size() + sides(1).size();
  result.stats.seconds = clock.elapsed();
  return result;
}

namespace {

bool syntactically_destabilizable(const Word& w, int strands) {
  if (w.empty() || idx(w.back()) != strands - 2) return false;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (idx(w[k]) > strands - 3) return false;
  }
  return true;
}

}  // namespace

DestabilizationResult destabilization_search(const Plat& p, const SearchBudget& budget, const SearchOptions& options) {
  if (p.strands() < 4) throw Error("precondition", "destabilization needs at least 4 strands");
  DestabilizationResult result;
  if (auto direct = destabilize_syntactic(p)) {
    result.status = SearchStatus::found;
    result.smaller = std::move(direct);
    result.trace = MoveTrace{p, {}, p};
    result.stats.nodes = 1;
    return result;
  }
  const Clock clock(budget.max_seconds);
  const int strands = p.strands();
  const Generators gens = encode_catalog(p.bridges());
  const Word raw = encode(p.word());
  Word start;
  const std::vector<Move> to_start = normalizing_moves(raw, start);
  const std::size_t max_len = static_cast<std::size_t>(budget.max_word_length.value_or(static_cast<int>(raw.size()) + 8));
  const InvariantCertificate root = options.recheck_every != 0 ? certificate(p) : InvariantCertificate{};

  Frontier frontier(start);
  std::optional<std::int64_t> hit;
  if (syntactically_destabilizable(start, strands)) hit = 0;

  Word scratch;
  while (!hit && !frontier.empty()) {
    if (frontier.size() >= budget.max_nodes) break;
    if (result.stats.expanded % 64 == 0 && clock.expired()) {
      result.stats.time_limit_hit = true;
      break;
    }
    std::int64_t id = frontier.pop();
    const Word current = frontier.node(id).word;
    ++result.stats.expanded;
    if (options.recheck_every != 0 && result.stats.expanded % options.recheck_every == 0) {
      recheck(current, strands, root);
    }
    for_each_neighbor(current, gens, scratch, [&](const Edge& e, const Word& next) {
      if (hit || next.size() > max_len) return;
      auto added = frontier.add(next, id, e);
      if (added && syntactically_destabilizable(next, strands)) hit = *added;
    });
  }

  if (hit) {
    const Word& rep = frontier.node(*hit).word;
    Plat representative(decode(rep, strands));
    MoveTrace t{p, to_start, representative};
    for (Move& m : path_moves(frontier.path_to(*hit), gens)) t.moves.push_back(std::move(m));
    result.status = SearchStatus::found;
    result.smaller = destabilize_syntactic(representative);
    result.trace = std::move(t);
  }
  result.stats.nodes = frontier.size();
  result.stats.seconds = clock.elapsed();
  return result;
}

}  // namespace platkit
