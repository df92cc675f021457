#include "platkit/api.hpp"

#include <sstream>

#include "platkit/invariants.hpp"
#include "platkit/platgraph.hpp"
#include "platkit/search.hpp"

namespace platkit::api {

namespace {

const Json& plat_field(const Json& req, const char* key) {
  if (req.is_object()) {
    if (auto it = req.find(key); it != req.end()) return *it;
  }
  return req;
}

Plat plat_of(const Json& req) { return plat_from_json(plat_field(req, "plat")); }

template <class T>
T optional_field(const Json& req, const char* key, T fallback) {
  if (!req.is_object()) return fallback;
  auto it = req.find(key);
  if (it == req.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error("parse", std::string("field '") + key + "' has the wrong type");
  }
}

const Json& required(const Json& req, const char* key) {
  if (!req.is_object() || !req.contains(key)) throw Error("parse", std::string("missing field '") + key + "'");
  return req.at(key);
}

SearchBudget budget_of(const Json& req) {
  if (!req.is_object() || !req.contains("budget")) return default_budget();
  return budget_from_json(req.at("budget"), default_budget());
}

Json check(const std::string& name, bool passed, const std::string& detail) {
  return Json{{"name", name}, {"passed", passed}, {"detail", detail}};
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json error_body(const Error& e) { return Json{{"error", {{"code", e.code()}, {"message", e.what()}}}}; }

int http_status(const Error& e) {
  if (e.code() == "parse") return 400;
  if (e.code() == "not_found") return 404;
  return 422;
}

Json validate(const Json& req) {
  const Plat p = plat_of(req);
  const PlatDiagram d = diagram_of(p);
  return Json{{"valid", true},
              {"plat", to_json(p)},
              {"text", to_text(p.word())},
              {"strands", p.strands()},
              {"bridges", p.bridges()},
              {"components", component_count(p)},
              {"writhe", writhe(d)},
              {"exponent_sum", exponent_sum(p.word())}};
}

Json invariants(const Json& req) { return to_json(certificate(plat_of(req))); }

Json move(const Json& req) {
  const Plat p = plat_of(req);
  const Side side = side_from_string(optional_field<std::string>(req, "side", "top"));
  const auto gen = optional_field<std::string>(req, "generator", "");
  if (gen.empty()) throw Error("parse", "missing field 'generator'");
  return Json{{"plat", to_json(apply_move(p, side, gen, optional_field<bool>(req, "inverse", false)))}};
}

Json stabilize(const Json& req) {
  const int sign = optional_field<int>(req, "sign", 1);
  if (sign != 1 && sign != -1) throw Error("precondition", "sign must be +1 or -1");
  return Json{{"plat", to_json(platkit::stabilize(plat_of(req), sign))}};
}

Json destabilize(const Json& req) {
  const Plat p = plat_of(req);
  if (auto smaller = destabilize_syntactic(p)) {
    return Json{{"status", "syntactic"}, {"plat", to_json(*smaller)}};
  }
  if (!optional_field<bool>(req, "search", false)) return Json{{"status", "none"}};
  return to_json(destabilization_search(p, budget_of(req)));
}

Json flip(const Json& req) { return Json{{"plat", to_json(platkit::flip(plat_of(req)))}}; }

Json pocket(const Json& req) {
  const Plat p = plat_of(req);
  const Side side = side_from_string(optional_field<std::string>(req, "side", "top"));
  const int bridge = optional_field<int>(req, "bridge", 1);
  const Json& path = required(req, "path");
  if (!path.is_array()) throw Error("parse", "field 'path' must be an array");
  std::vector<PocketStep> steps;
  for (const Json& s : path) steps.push_back(pocket_step_from_json(s));
  return to_json(pocket_move(p, side, bridge, steps));
}

RenderSpec render_spec_from_json(const Json& j) {
  RenderSpec spec;
  if (j.is_null()) return spec;
  if (!j.is_object()) throw Error("parse", "render spec must be an object");
  spec.width = optional_field<int>(j, "width", spec.width);
  spec.height = optional_field<int>(j, "height", spec.height);
  spec.strand_spacing = optional_field<int>(j, "strand_spacing", spec.strand_spacing);
  spec.crossing_gap = optional_field<int>(j, "crossing_gap", spec.crossing_gap);
  spec.labels = optional_field<bool>(j, "labels", spec.labels);
  return spec;
}

std::string render(const Json& req) {
  const Json spec = req.is_object() && req.contains("spec") ? req.at("spec") : Json(nullptr);
  return render_svg(plat_of(req), render_spec_from_json(spec));
}

Json equivalence(const Json& req) {
  const Plat p1 = plat_from_json(required(req, "p1"));
  const Plat p2 = plat_from_json(required(req, "p2"));
  return to_json(equivalence_search(p1, p2, budget_of(req)));
}

Json generators(int n) {
  if (n < 1) throw Error("precondition", "n must be at least 1");
  return to_json(hilden_generators(n));
}

Json explore_graph(const Json& req) {
  const Plat seed = plat_from_json(plat_field(req, "seed"));
  const int max_level = optional_field<int>(req, "max_level", seed.bridges() + 1);
  const PlatGraph g = explore(seed, max_level, budget_of(req));
  return Json{{"graph", to_json(g)},
              {"summary", to_json(summarize(g))},
              {"cycle", to_json(cycle_check(g))},
              {"dot", to_dot(g)}};
}

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string name;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      name = line.substr(hash + 1);
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    name = trim(name);
    if (name.empty()) name = "line-" + std::to_string(number);
    out.push_back({name, Plat(parse_braid_word(trim(line)))});
  }
  return out;
}

std::vector<CorpusEntry> corpus() { return parse_corpus(corpus_text()); }

Json corpus_verify(const SearchBudget& budget) {
  const auto entries = corpus();
  auto find = [&](const std::string& name) -> const Plat& {
    for (const auto& e : entries) {
      if (e.name == name) return e.plat;
    }
    throw Error("not_found", "corpus entry '" + name + "' is missing");
  };
  Json checks = Json::array();

  const Plat& ex = find("six-strand-knot");
  checks.push_back(check("six-strand-knot", ex.strands() == 6 && component_count(ex) == 1,
                         "strands " + std::to_string(ex.strands()) + ", components " +
                             std::to_string(component_count(ex))));

  const Plat& b8 = find("last-page-b8");
  const Plat& b6 = find("last-page-b6");
  const InvariantCertificate c8 = certificate(b8);
  const InvariantCertificate c6 = certificate(b6);
  checks.push_back(check("last-page-components", c8.components == 1 && c6.components == 1,
                         std::to_string(c8.components) + " and " + std::to_string(c6.components)));
  checks.push_back(check("last-page-jones", c8.jones == c6.jones,
                         "B8: " + c8.jones.to_string() + "; B6: " + c6.jones.to_string()));
  checks.push_back(check("last-page-alexander", c8.alexander == c6.alexander,
                         "B8: " + c8.alexander.to_string() + "; B6: " + c6.alexander.to_string()));
  checks.push_back(check("last-page-b8-no-syntactic-destabilization", !destabilize_syntactic(b8).has_value(), ""));
  const DestabilizationResult d = destabilization_search(b8, budget);
  checks.push_back(check("last-page-b8-destabilization-search-exhausted", d.status == SearchStatus::exhausted,
                         "status " + std::string(to_string(d.status)) + " after " + std::to_string(d.stats.nodes) +
                             " nodes; exhaustion is not a proof"));

  for (int k : {3, 5, 7}) {
    const Plat& t = find("torus-" + std::to_string(k));
    const InvariantCertificate c = certificate(t);
    const std::int64_t det = determinant_from_jones(c.jones);
    checks.push_back(check("torus-" + std::to_string(k) + "-flip", certificate(platkit::flip(t)) == c,
                           "determinant " + std::to_string(det)));
    checks.push_back(check("torus-" + std::to_string(k) + "-determinant", det == k, "expected " + std::to_string(k)));
  }

  bool all = true;
  for (const Json& c : checks) all = all && c.at("passed").get<bool>();
  return Json{{"passed", all}, {"checks", checks}};
}

}  // namespace platkit::api
