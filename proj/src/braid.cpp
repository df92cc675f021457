#include "platkit/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "platkit/error.hpp"

namespace platkit {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw Error("precondition", "a braid word needs at least 2 strands");
  for (BraidLetter l : letters_) {
    if (l.index() < 1 || l.index() >= strands_) {
      throw Error("precondition", "generator index " + std::to_string(l.index()) + " out of range for " +
                                      std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::from_signed(int strands, const std::vector<int>& letters) {
  std::vector<BraidLetter> out;
  out.reserve(letters.size());
  for (int v : letters) {
    if (v == 0) throw Error("parse", "generator index 0 is not allowed");
    out.push_back(BraidLetter::from_signed(v));
  }
  return BraidWord(strands, std::move(out));
}

std::vector<int> BraidWord::as_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (BraidLetter l : letters_) out.push_back(l.as_signed());
  return out;
}

int BraidWord::max_index() const noexcept {
  int m = 0;
  for (BraidLetter l : letters_) m = std::max(m, l.index());
  return m;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error("precondition", "not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent(int m, int i) {
  Permutation p = identity(m);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::then(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) throw Error("precondition", "permutation size mismatch");
  std::vector<int> img(first.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = second(first.images_[i]);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  for (const auto& c : cycles()) out.push_back(static_cast<int>(c.size()));
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("parse", "cannot parse token '" + std::string(token) + "'");
  }
  return v;
}

std::string_view strip_braces(std::string_view s) {
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') return s.substr(1, s.size() - 2);
  return s;
}

// Appends the letters denoted by one token ("3", "-2", "s2^-1", "s_{4}^{2}").
void parse_token(std::string_view token, std::vector<int>& out) {
  if (token.front() != 's') {
    int v = parse_int(token, token);
    if (v == 0) throw Error("parse", "generator index 0 is not allowed");
    out.push_back(v);
    return;
  }
  std::string_view rest = token.substr(1);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
  std::string_view index_part = rest;
  std::string_view exp_part = "1";
  if (auto caret = rest.find('^'); caret != std::string_view::npos) {
    index_part = rest.substr(0, caret);
    exp_part = rest.substr(caret + 1);
  }
  int index = parse_int(strip_braces(index_part), token);
  int exponent = parse_int(strip_braces(exp_part), token);
  if (index <= 0) throw Error("parse", "generator index must be positive in '" + std::string(token) + "'");
  if (exponent == 0) return;
  int sign = exponent < 0 ? -1 : 1;
  for (int k = 0; k < std::abs(exponent); ++k) out.push_back(sign * index);
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, std::optional<int> strands) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  if (body.substr(0, 8) == "strands=") {
    auto semi = body.find(';');
    if (semi == std::string_view::npos) throw Error("parse", "header 'strands=<m>' must end with ';'");
    int header = parse_int(body.substr(8, semi - 8), body.substr(0, semi));
    if (strands && *strands != header) throw Error("parse", "strand count disagrees with header");
    strands = header;
    body.remove_prefix(semi + 1);
  }
  std::vector<int> letters;
  std::istringstream in{std::string(body)};
  std::string token;
  while (in >> token) parse_token(token, letters);

  int max_index = 0;
  for (int v : letters) max_index = std::max(max_index, std::abs(v));
  if (!strands) {
    int m = std::max(2, max_index + 1);
    strands = m % 2 == 0 ? m : m + 1;
  }
  if (max_index >= *strands) {
    throw Error("parse", "generator index " + std::to_string(max_index) + " needs more than " +
                             std::to_string(*strands) + " strands");
  }
  return BraidWord::from_signed(*strands, letters);
}

std::string to_text(const BraidWord& w) {
  std::ostringstream out;
  out << "strands=" << w.strands() << ";";
  for (BraidLetter l : w.letters()) out << ' ' << l.as_signed();
  return out.str();
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (BraidLetter l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord invert(const BraidWord& w) {
  std::vector<BraidLetter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw Error("precondition", "cannot concatenate words on " + std::to_string(a.strands()) + " and " +
                                    std::to_string(b.strands()) + " strands");
  }
  std::vector<BraidLetter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(out));
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (BraidLetter l : w.letters()) s += l.sign();
  return s;
}

Permutation permutation_of(const BraidWord& w) {
  // Track where the strand starting at each bottom position ends up.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));  // at[pos-1] = start point now at pos
  for (int i = 0; i < w.strands(); ++i) at[static_cast<std::size_t>(i)] = i + 1;
  for (BraidLetter l : w.letters()) std::swap(at[static_cast<std::size_t>(l.index() - 1)], at[static_cast<std::size_t>(l.index())]);
  std::vector<int> img(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) img[static_cast<std::size_t>(at[pos] - 1)] = static_cast<int>(pos) + 1;
  return Permutation(std::move(img));
}

BraidWord widen(const BraidWord& w, int strands) {
  if (strands < w.strands()) throw Error("precondition", "cannot narrow a braid word");
  return BraidWord(strands, w.letters());
}

std::vector<Rewrite> enumerate_rewrites(const BraidWord& w, bool include_insertions) {
  std::vector<Rewrite> out;
  const auto& L = w.letters();
  const int n = static_cast<int>(L.size());
  for (int p = 0; p + 1 < n; ++p) {
    BraidLetter x = L[static_cast<std::size_t>(p)], y = L[static_cast<std::size_t>(p + 1)];
    if (std::abs(x.index() - y.index()) >= 2) out.push_back({RewriteKind::commutation, p, {x, y}, {y, x}});
    if (y == x.inverse()) out.push_back({RewriteKind::free_delete, p, {x, y}, {}});
  }
  for (int p = 0; p + 2 < n; ++p) {
    BraidLetter x = L[static_cast<std::size_t>(p)], y = L[static_cast<std::size_t>(p + 1)],
                z = L[static_cast<std::size_t>(p + 2)];
    if (std::abs(x.index() - y.index()) != 1 || x.index() != z.index()) continue;
    if (x.sign() == y.sign() && z == x) {
      out.push_back({RewriteKind::braid, p, {x, y, z}, {y, x, y}});
    } else if (z == x.inverse()) {
      // σ_i^a σ_j^b σ_i^-a = σ_j^-a σ_i^b σ_j^a
      out.push_back({RewriteKind::conjugation, p, {x, y, z},
                     {BraidLetter(y.index(), -x.sign()), BraidLetter(x.index(), y.sign()), BraidLetter(y.index(), x.sign())}});
    }
  }
  if (include_insertions && n > 0) {
    std::set<int> alphabet;
    for (BraidLetter l : L) {
      for (int d = -1; d <= 1; ++d) {
        int idx = l.index() + d;
        if (idx >= 1 && idx < w.strands()) alphabet.insert(idx);
      }
    }
    for (int p = 0; p <= n; ++p) {
      for (int idx : alphabet) {
        for (int s : {1, -1}) {
          BraidLetter a(idx, s);
          out.push_back({RewriteKind::free_insert, p, {}, {a, a.inverse()}});
        }
      }
    }
  }
  return out;
}

BraidWord apply_rewrite(const BraidWord& w, const Rewrite& r) {
  const auto& L = w.letters();
  auto pos = static_cast<std::size_t>(r.position);
  if (r.position < 0 || pos + r.from.size() > L.size() ||
      !std::equal(r.from.begin(), r.from.end(), L.begin() + static_cast<std::ptrdiff_t>(pos))) {
    throw Error("precondition", "rewrite does not match the word at position " + std::to_string(r.position));
  }
  std::vector<BraidLetter> out;
  out.reserve(L.size() - r.from.size() + r.to.size());
  out.insert(out.end(), L.begin(), L.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), r.to.begin(), r.to.end());
  out.insert(out.end(), L.begin() + static_cast<std::ptrdiff_t>(pos + r.from.size()), L.end());
  return BraidWord(w.strands(), std::move(out));
}

std::vector<BraidWord> braid_rewrites(const BraidWord& w) {
  std::set<BraidWord> seen;
  for (const Rewrite& r : enumerate_rewrites(w)) seen.insert(apply_rewrite(w, r));
  return {seen.begin(), seen.end()};
}

}  // namespace platkit
