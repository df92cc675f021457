#include "platkit/platgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <sstream>

#include "platkit/error.hpp"

namespace platkit {

std::string_view to_string(ProvenanceKind k) noexcept {
  switch (k) {
    case ProvenanceKind::seed: return "seed";
    case ProvenanceKind::new_class: return "new-class";
    case ProvenanceKind::merged: return "merged";
    case ProvenanceKind::distinct: return "distinct";
    case ProvenanceKind::unresolved: return "unresolved";
    case ProvenanceKind::destabilized: return "destabilized";
    case ProvenanceKind::dead_end_candidate: return "dead-end-candidate";
  }
  return "?";
}

ProvenanceKind provenance_kind_from_string(std::string_view s) {
  for (ProvenanceKind k : {ProvenanceKind::seed, ProvenanceKind::new_class, ProvenanceKind::merged,
                           ProvenanceKind::distinct, ProvenanceKind::unresolved, ProvenanceKind::destabilized,
                           ProvenanceKind::dead_end_candidate}) {
    if (to_string(k) == s) return k;
  }
  throw Error("parse", "unknown provenance kind '" + std::string(s) + "'");
}

void PlatGraph::add_edge(int a, int b) {
  const auto& va = vertex(a);
  const auto& vb = vertex(b);
  if (std::abs(va.bridge_level - vb.bridge_level) != 1) {
    throw Error("precondition", "plat graph edges must join adjacent bridge levels");
  }
  edges.emplace(std::min(a, b), std::max(a, b));
}

const PlatGraphVertex& PlatGraph::vertex(int id) const {
  if (id < 0 || id >= static_cast<int>(vertices.size())) {
    throw Error("not_found", "no vertex with class id " + std::to_string(id));
  }
  return vertices[static_cast<std::size_t>(id)];
}

namespace {

Plat stabilize_left(const Plat& p, int sign) {
  std::vector<BraidLetter> letters;
  for (BraidLetter l : p.word().letters()) letters.emplace_back(l.index() + 2, l.sign());
  letters.emplace_back(2, sign);
  return Plat(BraidWord(p.strands() + 2, std::move(letters)));
}

Plat scramble(const Plat& p, int moves, std::mt19937& rng) {
  const HildenCatalog cat = hilden_generators(p.bridges());
  Plat out = p;
  for (int k = 0; k < moves; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, cat.generators.size() - 1);
    const auto& g = cat.generators[pick(rng)];
    Side side = (rng() & 1u) ? Side::top : Side::bottom;
    bool inverse = (rng() & 1u) != 0;
    out = apply_move(out, side, g.name, inverse);
  }
  return out;
}

class Builder {
 public:
  Builder(PlatGraph& g, const SearchBudget& budget) : g_(g), budget_(budget) {}

  int add_vertex(const Plat& p, InvariantCertificate cert) {
    PlatGraphVertex v{p, p.bridges(), std::move(cert), static_cast<int>(g_.vertices.size()), true, false};
    g_.vertices.push_back(std::move(v));
    return g_.vertices.back().class_id;
  }

  // Merges `p` into an existing vertex on its level when a trace is found,
  // otherwise opens a new class.
  int place(const Plat& p) {
    InvariantCertificate cert = certificate(p);
    std::vector<int> unresolved_with;
    std::vector<int> distinct_from;
    for (const auto& v : g_.vertices) {
      if (v.bridge_level != p.bridges()) continue;
      if (!(v.certificate == cert)) {
        distinct_from.push_back(v.class_id);
        continue;
      }
      if (v.representative == p) return v.class_id;
      EquivalenceResult r = equivalence_search(p, v.representative, budget_);
      if (r.status == SearchStatus::found) {
        g_.provenance.push_back({ProvenanceKind::merged, v.class_id, -1, "candidate " + to_text(p.word()), r.trace});
        return v.class_id;
      }
      unresolved_with.push_back(v.class_id);
    }
    int id = add_vertex(p, std::move(cert));
    g_.provenance.push_back({ProvenanceKind::new_class, id, -1, to_text(p.word()), std::nullopt});
    for (int other : distinct_from) {
      g_.provenance.push_back({ProvenanceKind::distinct, id, other, "certificates differ", std::nullopt});
    }
    for (int other : unresolved_with) {
      g_.vertices[static_cast<std::size_t>(id)].resolved = false;
      g_.provenance.push_back({ProvenanceKind::unresolved, id, other, "equal certificates, no trace within budget", std::nullopt});
    }
    return id;
  }

 private:
  PlatGraph& g_;
  const SearchBudget& budget_;
};

}  // namespace

PlatGraph explore(const Plat& seed, int max_level, const SearchBudget& budget, const ExploreOptions& options) {
  if (max_level > options.level_cap) {
    throw Error("precondition", "max_level " + std::to_string(max_level) + " exceeds the cap of " +
                                    std::to_string(options.level_cap));
  }
  if (max_level < seed.bridges()) throw Error("precondition", "max_level is below the seed's bridge level");

  PlatGraph g;
  g.budget = budget;
  g.max_level = max_level;
  Builder builder(g, budget);
  std::mt19937 rng(options.seed);

  const int seed_id = builder.add_vertex(seed, certificate(seed));
  g.provenance.push_back({ProvenanceKind::seed, seed_id, -1, to_text(seed.word()), std::nullopt});

  if (seed.bridges() >= 2) {
    DestabilizationResult d = destabilization_search(seed, budget);
    if (d.status == SearchStatus::found && d.smaller) {
      int lower = builder.place(*d.smaller);
      g.add_edge(seed_id, lower);
      g.provenance.push_back({ProvenanceKind::destabilized, seed_id, lower, "", d.trace});
    } else {
      g.vertices[static_cast<std::size_t>(seed_id)].dead_end_candidate = true;
      g.provenance.push_back({ProvenanceKind::dead_end_candidate, seed_id, -1,
                              "destabilization search exhausted after " + std::to_string(d.stats.nodes) + " nodes",
                              std::nullopt});
    }
  }

  for (int level = seed.bridges(); level < max_level; ++level) {
    std::vector<int> at_level;
    for (const auto& v : g.vertices) {
      if (v.bridge_level == level) at_level.push_back(v.class_id);
    }
    for (int id : at_level) {
      const Plat rep = g.vertex(id).representative;
      std::vector<Plat> candidates{stabilize(rep, 1), stabilize(rep, -1), stabilize_left(rep, 1), stabilize_left(rep, -1)};
      for (int k = 0; k < options.scrambles; ++k) candidates.push_back(stabilize(scramble(rep, options.scramble_moves, rng), 1));
      for (const Plat& c : candidates) {
        int up = builder.place(c);
        g.add_edge(id, up);
      }
    }
  }
  return g;
}

std::optional<int> distance(const PlatGraph& g, int from, int to) {
  g.vertex(from);
  g.vertex(to);
  std::vector<int> dist(g.vertices.size(), -1);
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (auto [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::queue<int> q;
  dist[static_cast<std::size_t>(from)] = 0;
  q.push(from);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == to) return dist[static_cast<std::size_t>(v)];
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return std::nullopt;
}

CycleReport cycle_check(const PlatGraph& g) {
  CycleReport report;
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges) {
    if (!g.vertices[static_cast<std::size_t>(a)].resolved || !g.vertices[static_cast<std::size_t>(b)].resolved) continue;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> parent(n, -2);
  for (std::size_t root = 0; root < n && report.acyclic; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> stack{static_cast<int>(root)};
    while (!stack.empty() && report.acyclic) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w == parent[static_cast<std::size_t>(v)]) continue;
        if (parent[static_cast<std::size_t>(w)] == -2) {
          parent[static_cast<std::size_t>(w)] = v;
          stack.push_back(w);
          continue;
        }
        // Non-tree edge v-w closes a cycle through their common ancestor.
        std::vector<int> up_v{v}, up_w{w};
        for (int x = v; parent[static_cast<std::size_t>(x)] >= 0; x = parent[static_cast<std::size_t>(x)]) up_v.push_back(parent[static_cast<std::size_t>(x)]);
        for (int x = w; parent[static_cast<std::size_t>(x)] >= 0; x = parent[static_cast<std::size_t>(x)]) up_w.push_back(parent[static_cast<std::size_t>(x)]);
        while (up_v.size() > 1 && up_w.size() > 1 && up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
          up_v.pop_back();
          up_w.pop_back();
        }
        report.acyclic = false;
        report.witness.assign(up_v.begin(), up_v.end());
        for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) report.witness.push_back(*it);
        report.witness.push_back(v);
        break;
      }
    }
  }
  if (!report.acyclic && !g.vertices.empty()) report.contradiction = g.vertices.front().certificate.components == 1;
  return report;
}

GraphSummary summarize(const PlatGraph& g) {
  std::map<int, int> resolved, unresolved;
  GraphSummary s;
  for (const auto& v : g.vertices) {
    (v.resolved ? resolved : unresolved)[v.bridge_level] += 1;
    if (v.resolved) unresolved.try_emplace(v.bridge_level, 0);
    s.dead_end_candidates += v.dead_end_candidate ? 1 : 0;
  }
  s.resolved_per_level.assign(resolved.begin(), resolved.end());
  s.unresolved_per_level.assign(unresolved.begin(), unresolved.end());
  return s;
}

std::string to_dot(const PlatGraph& g) {
  std::vector<const PlatGraphVertex*> order;
  for (const auto& v : g.vertices) order.push_back(&v);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return std::pair(a->bridge_level, a->class_id) < std::pair(b->bridge_level, b->class_id);
  });
  std::ostringstream out;
  out << "graph plat_graph {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < order.size();) {
    int level = order[i]->bridge_level;
    out << "  { rank=same; // bridge level " << level << "\n";
    for (; i < order.size() && order[i]->bridge_level == level; ++i) {
      const auto& v = *order[i];
      out << "    v" << v.class_id << " [label=\"" << v.class_id << ": " << to_text(v.representative.word()) << "\"";
      if (!v.resolved) out << ", style=dashed";
      if (v.dead_end_candidate) out << ", shape=box";
      out << "];\n";
    }
    out << "  }\n";
  }
  for (auto [a, b] : g.edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace platkit
