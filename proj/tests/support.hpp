#pragma once

// Helpers shared by the unit tests and the acceptance runner: seeded random
// words and plats, plus two oracles that share no code with the library's
// Temperley-Lieb and Wirtinger paths.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "platkit/braid.hpp"
#include "platkit/laurent.hpp"
#include "platkit/plat.hpp"

namespace platkit::testing {

inline BraidWord random_word(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> index(1, strands - 1), sign(0, 1);
  std::vector<int> letters;
  for (int k = 0; k < length; ++k) letters.push_back(sign(rng) ? index(rng) : -index(rng));
  return BraidWord::from_signed(strands, letters);
}

inline Plat random_plat(std::mt19937& rng, int max_bridges, int max_length) {
  const int n = std::uniform_int_distribution<int>(1, max_bridges)(rng);
  const int len = std::uniform_int_distribution<int>(0, max_length)(rng);
  return Plat(random_word(rng, 2 * n, len));
}

// Brute-force Kauffman state sum over the 2^len smoothings of the plat diagram.
// Nodes are (level, position) points; every smoothing leaves each node with
// degree two, so loops are the connected components. A positive letter
// weights the vertical smoothing by A and the cup-cap smoothing by A^-1.
inline LaurentPolynomial state_sum_bracket(const BraidWord& w) {
  const int m = w.strands();
  const int rows = static_cast<int>(w.size());
  if (rows > 24) throw std::invalid_argument("state sum oracle limited to 24 crossings");
  auto node = [m](int level, int pos) { return level * m + (pos - 1); };
  const int nodes = (rows + 1) * m;

  std::map<std::pair<int, int>, Coeff> by_loops;  // (A exponent, loops) -> count
  for (std::uint32_t state = 0; state < (1u << rows); ++state) {
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    auto join = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (int j = 1; 2 * j <= m; ++j) {
      join(node(0, 2 * j - 1), node(0, 2 * j));
      join(node(rows, 2 * j - 1), node(rows, 2 * j));
    }
    int a_exp = 0;
    for (int k = 1; k <= rows; ++k) {
      const BraidLetter l = w.letters()[static_cast<std::size_t>(k - 1)];
      const int i = l.index();
      const bool vertical = (state >> (k - 1)) & 1u;
      for (int p = 1; p <= m; ++p) {
        if (p != i && p != i + 1) join(node(k - 1, p), node(k, p));
      }
      if (vertical) {
        join(node(k - 1, i), node(k, i));
        join(node(k - 1, i + 1), node(k, i + 1));
        a_exp += l.sign();
      } else {
        join(node(k - 1, i), node(k - 1, i + 1));
        join(node(k, i), node(k, i + 1));
        a_exp -= l.sign();
      }
    }
    int loops = 0;
    for (int x = 0; x < nodes; ++x) loops += find(x) == x ? 1 : 0;
    ++by_loops[{a_exp, loops}];
  }

  const LaurentPolynomial delta = LaurentPolynomial::from_terms({{2, -1}, {-2, -1}}, "A");
  LaurentPolynomial total("A");
  for (const auto& [key, count] : by_loops) {
    LaurentPolynomial term = LaurentPolynomial::monomial(count, key.first, "A");
    for (int k = 1; k < key.second; ++k) term = term * delta;
    total += term;
  }
  return total;
}

// Alexander polynomial of the trefoil from the presentation <x, y | xyx = yxy>,
// computed with a hand-rolled Fox derivative d/dx of xyxy^-1x^-1y^-1 under x, y -> t.
inline std::map<int, Coeff> fox_trefoil_alexander() {
  const int relator[][2] = {{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}};
  std::map<int, Coeff> d;
  int prefix = 0;
  for (const auto& [gen, e] : relator) {
    if (gen == 0) {
      if (e > 0) d[prefix] += 1;
      else d[prefix - 1] -= 1;
    }
    prefix += e;
  }
  std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
  return d;
}

}  // namespace platkit::testing
