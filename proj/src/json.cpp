#include "platkit/json.hpp"

#include "platkit/error.hpp"

namespace platkit {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error("parse", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("field '") + what + "' has the wrong type");
  }
}

std::vector<BraidLetter> letters_from_json(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string("field '") + what + "' must be an array of signed letters");
  std::vector<BraidLetter> out;
  for (const Json& v : j) {
    if (!v.is_number_integer() || v.get<int>() == 0) malformed(std::string("field '") + what + "' has a bad letter");
    out.push_back(BraidLetter::from_signed(v.get<int>()));
  }
  return out;
}

Json letters_to_json(const std::vector<BraidLetter>& letters) {
  Json out = Json::array();
  for (BraidLetter l : letters) out.push_back(l.as_signed());
  return out;
}

}  // namespace

Json to_json(const BraidWord& w) { return letters_to_json(w.letters()); }

Json to_json(const Plat& p) {
  return Json{{"strands", p.strands()}, {"word", to_json(p.word())}, {"convention", "standard-cups"}};
}

Json to_json(const LaurentPolynomial& p) {
  return Json{{"var", p.var()}, {"low", p.min_exponent()}, {"coefficients", p.dense()}, {"text", p.to_string()}};
}

Json to_json(const CosetType& c) { return Json(c.parts); }

Json to_json(const InvariantCertificate& c) {
  return Json{{"components", c.components},
              {"coset_type", to_json(c.coset_type)},
              {"jones", to_json(c.jones)},
              {"alexander", to_json(c.alexander)}};
}

Json to_json(const HildenCatalog& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(Json{{"name", g.name}, {"word", to_json(g.word)}});
  return Json{{"n", c.n}, {"strands", 2 * c.n}, {"generators", gens}};
}

Json to_json(const GeneratorUse& g) { return Json{{"name", g.name}, {"inverse", g.inverse}}; }

Json to_json(const Move& m) {
  Json out{{"kind", to_string(m.kind)}};
  if (m.kind == MoveKind::hilden_left || m.kind == MoveKind::hilden_right) {
    out["generator"] = m.generator;
    out["inverse"] = m.inverse;
  } else {
    out["position"] = m.position;
    out["from"] = letters_to_json(m.from);
    out["to"] = letters_to_json(m.to);
  }
  return out;
}

Json to_json(const MoveTrace& t) {
  Json moves = Json::array();
  for (const Move& m : t.moves) moves.push_back(to_json(m));
  return Json{{"start", to_json(t.start)}, {"moves", moves}, {"end", to_json(t.end)}};
}

Json to_json(const SearchBudget& b) {
  Json out{{"max_nodes", b.max_nodes}};
  out["max_word_length"] = b.max_word_length ? Json(*b.max_word_length) : Json(nullptr);
  out["max_seconds"] = b.max_seconds;
  return out;
}

Json to_json(const SearchStats& s) {
  return Json{{"nodes", s.nodes},
              {"expanded", s.expanded},
              {"time_limit_hit", s.time_limit_hit},
              {"unidirectional_fallback", s.unidirectional_fallback}};
}

// Wall-clock time is left out so identical requests give identical bytes.
Json to_json(const EquivalenceResult& r) {
  Json out{{"status", to_string(r.status)}};
  if (r.trace) {
    out["trace_length"] = r.trace->moves.size();
    out["trace"] = to_json(*r.trace);
  }
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["stats"] = to_json(r.stats);
  return out;
}

Json to_json(const DestabilizationResult& r) {
  Json out{{"status", to_string(r.status)}};
  if (r.smaller) out["plat"] = to_json(*r.smaller);
  if (r.trace) out["trace"] = to_json(*r.trace);
  out["stats"] = to_json(r.stats);
  return out;
}

Json to_json(const PocketResult& r) {
  Json trace = Json::array();
  for (const auto& g : r.trace) trace.push_back(to_json(g));
  return Json{{"plat", to_json(r.plat)}, {"trace", trace}};
}

Json to_json(const PlatGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    vertices.push_back(Json{{"class_id", v.class_id},
                            {"bridge_level", v.bridge_level},
                            {"representative", to_json(v.representative)},
                            {"certificate", to_json(v.certificate)},
                            {"resolved", v.resolved},
                            {"dead_end_candidate", v.dead_end_candidate}});
  }
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  Json provenance = Json::array();
  for (const auto& p : g.provenance) {
    Json e{{"kind", to_string(p.kind)}, {"vertex", p.vertex}, {"other", p.other}, {"note", p.note}};
    if (p.trace) e["trace"] = to_json(*p.trace);
    provenance.push_back(std::move(e));
  }
  return Json{{"max_level", g.max_level},
              {"budget", to_json(g.budget)},
              {"vertices", vertices},
              {"edges", edges},
              {"provenance", provenance}};
}

Json to_json(const CycleReport& c) {
  return Json{{"acyclic", c.acyclic}, {"witness", c.witness}, {"contradiction", c.contradiction}};
}

Json to_json(const GraphSummary& s) {
  auto levels = [](const std::vector<std::pair<int, int>>& v) {
    Json out = Json::array();
    for (auto [level, count] : v) out.push_back(Json{{"level", level}, {"count", count}});
    return out;
  };
  return Json{{"resolved_per_level", levels(s.resolved_per_level)},
              {"unresolved_per_level", levels(s.unresolved_per_level)},
              {"dead_end_candidates", s.dead_end_candidates}};
}

Plat plat_from_json(const Json& j) {
  if (j.is_string()) return Plat(parse_braid_word(j.get<std::string>()));
  if (!j.is_object()) malformed("a plat is an object {strands, word} or a text word");
  if (auto it = j.find("convention"); it != j.end() && *it != "standard-cups") {
    malformed("unsupported plat convention");
  }
  const int strands = get_as<int>(field(j, "strands"), "strands");
  if (strands < 2) throw Error("precondition", "a plat needs at least 2 strands");
  return Plat(BraidWord(strands, letters_from_json(field(j, "word"), "word")));
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  auto coeffs = get_as<std::vector<Coeff>>(field(j, "coefficients"), "coefficients");
  return LaurentPolynomial::from_dense(get_as<int>(field(j, "low"), "low"), std::move(coeffs),
                                       get_as<std::string>(field(j, "var"), "var"));
}

InvariantCertificate certificate_from_json(const Json& j) {
  InvariantCertificate c;
  c.components = get_as<int>(field(j, "components"), "components");
  c.coset_type.parts = get_as<std::vector<int>>(field(j, "coset_type"), "coset_type");
  c.jones = polynomial_from_json(field(j, "jones"));
  c.alexander = polynomial_from_json(field(j, "alexander"));
  return c;
}

GeneratorUse generator_use_from_json(const Json& j) {
  GeneratorUse g;
  g.name = get_as<std::string>(field(j, "name"), "name");
  if (auto it = j.find("inverse"); it != j.end()) g.inverse = get_as<bool>(*it, "inverse");
  return g;
}

Move move_from_json(const Json& j) {
  Move m;
  m.kind = move_kind_from_string(get_as<std::string>(field(j, "kind"), "kind"));
  if (m.kind == MoveKind::hilden_left || m.kind == MoveKind::hilden_right) {
    m.generator = get_as<std::string>(field(j, "generator"), "generator");
    if (auto it = j.find("inverse"); it != j.end()) m.inverse = get_as<bool>(*it, "inverse");
  } else {
    m.position = get_as<int>(field(j, "position"), "position");
    m.from = letters_from_json(field(j, "from"), "from");
    m.to = letters_from_json(field(j, "to"), "to");
  }
  return m;
}

MoveTrace trace_from_json(const Json& j) {
  MoveTrace t{plat_from_json(field(j, "start")), {}, plat_from_json(field(j, "end"))};
  const Json& moves = field(j, "moves");
  if (!moves.is_array()) malformed("field 'moves' must be an array");
  for (const Json& m : moves) t.moves.push_back(move_from_json(m));
  return t;
}

SearchBudget budget_from_json(const Json& j, const SearchBudget& defaults) {
  SearchBudget b = defaults;
  if (j.is_null()) return b;
  if (!j.is_object()) malformed("budget must be an object");
  if (auto it = j.find("max_nodes"); it != j.end()) b.max_nodes = get_as<std::size_t>(*it, "max_nodes");
  if (auto it = j.find("max_word_length"); it != j.end()) {
    b.max_word_length = it->is_null() ? std::nullopt : std::optional<int>(get_as<int>(*it, "max_word_length"));
  }
  if (auto it = j.find("max_seconds"); it != j.end()) b.max_seconds = get_as<double>(*it, "max_seconds");
  if (b.max_nodes == 0 || b.max_seconds <= 0 || (b.max_word_length && *b.max_word_length <= 0)) {
    throw Error("precondition", "budget fields must be positive");
  }
  return b;
}

PocketStep pocket_step_from_json(const Json& j) {
  const auto dir = get_as<std::string>(field(j, "direction"), "direction");
  const auto layer = get_as<std::string>(field(j, "layer"), "layer");
  if (dir != "left" && dir != "right") malformed("direction must be 'left' or 'right'");
  if (layer != "over" && layer != "under") malformed("layer must be 'over' or 'under'");
  return PocketStep{dir == "left" ? Direction::left : Direction::right, layer == "over" ? Layer::over : Layer::under};
}

PlatGraph graph_from_json(const Json& j) {
  PlatGraph g;
  g.max_level = get_as<int>(field(j, "max_level"), "max_level");
  g.budget = budget_from_json(field(j, "budget"), SearchBudget{});
  for (const Json& v : field(j, "vertices")) {
    PlatGraphVertex vertex{plat_from_json(field(v, "representative")),
                           get_as<int>(field(v, "bridge_level"), "bridge_level"),
                           certificate_from_json(field(v, "certificate")),
                           get_as<int>(field(v, "class_id"), "class_id"),
                           get_as<bool>(field(v, "resolved"), "resolved"),
                           get_as<bool>(field(v, "dead_end_candidate"), "dead_end_candidate")};
    if (vertex.class_id != static_cast<int>(g.vertices.size())) malformed("vertices must be listed by class_id");
    if (vertex.bridge_level != vertex.representative.bridges()) malformed("bridge_level disagrees with the representative");
    g.vertices.push_back(std::move(vertex));
  }
  for (const Json& e : field(j, "edges")) {
    auto pair = get_as<std::vector<int>>(e, "edges");
    if (pair.size() != 2) malformed("an edge is a pair of class ids");
    g.add_edge(pair[0], pair[1]);
  }
  for (const Json& p : field(j, "provenance")) {
    ProvenanceEntry entry;
    entry.kind = provenance_kind_from_string(get_as<std::string>(field(p, "kind"), "kind"));
    entry.vertex = get_as<int>(field(p, "vertex"), "vertex");
    entry.other = get_as<int>(field(p, "other"), "other");
    entry.note = get_as<std::string>(field(p, "note"), "note");
    if (auto it = p.find("trace"); it != p.end()) entry.trace = trace_from_json(*it);
    g.provenance.push_back(std::move(entry));
  }
  return g;
}

}  // namespace platkit
