// platkit command-line front end. Each subcommand builds the same JSON request
// the HTTP service accepts and calls the shared api layer, so `--json` output
// is byte-identical to the service response body.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "platkit/api.hpp"
#include "platkit/service.hpp"

using platkit::Error;
using platkit::Json;
namespace api = platkit::api;

namespace {

enum Exit { ok = 0, failure = 1, distinct = 2, exhausted = 3, corpus_failed = 4 };

struct PlatArg {
  std::string text;
  std::optional<int> strands;
};

// A plat argument is either canonical text ("2 4 1 3 1", "strands=6; 2 4 1 3 1") or a JSON plat object.
Json plat_request(const PlatArg& arg) {
  const auto first = arg.text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg.text[first] == '{') {
    Json j;
    try {
      j = Json::parse(arg.text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error("parse", std::string("malformed plat JSON: ") + e.what());
    }
    return platkit::to_json(platkit::plat_from_json(j));
  }
  return platkit::to_json(platkit::Plat(platkit::parse_braid_word(arg.text, arg.strands)));
}

std::string plat_text(const Json& plat) { return platkit::to_text(platkit::plat_from_json(plat).word()); }

struct BudgetArgs {
  std::optional<std::size_t> nodes;
  std::optional<int> max_length;
  std::optional<double> seconds;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", nodes, "node budget (default 10^6 or PLATKIT_BUDGET_NODES)");
    cmd->add_option("--budget-length", max_length, "maximum word length (default input length + 8)");
    cmd->add_option("--budget-seconds", seconds, "wall-clock budget in seconds (default 30)");
  }
  void into(Json& req) const {
    if (!nodes && !max_length && !seconds) return;
    Json b = Json::object();
    if (nodes) b["max_nodes"] = *nodes;
    if (max_length) b["max_word_length"] = *max_length;
    if (seconds) b["max_seconds"] = *seconds;
    req["budget"] = b;
  }
};

void print_json(const Json& j) { std::cout << api::dump(j); }

void print_certificate(const Json& c) {
  std::cout << "components: " << c.at("components") << "\n"
            << "coset type: " << c.at("coset_type").dump() << "\n"
            << "jones (A): " << c.at("jones").at("text").get<std::string>() << "\n"
            << "alexander (t): " << c.at("alexander").at("text").get<std::string>() << "\n";
}

void print_trace(const Json& trace) {
  const Json& moves = trace.at("moves");
  std::cout << "trace: " << moves.size() << " moves\n";
  for (const Json& m : moves) {
    std::cout << "  " << m.at("kind").get<std::string>();
    if (m.contains("generator") && !m.at("generator").get<std::string>().empty()) {
      std::cout << " " << m.at("generator").get<std::string>() << (m.value("inverse", false) ? "^-1" : "");
    }
    if (m.contains("position")) std::cout << " @" << m.at("position");
    std::cout << "\n";
  }
}

int search_exit(const std::string& status) {
  if (status == "found") return ok;
  if (status == "distinct-certificates") return distinct;
  return exhausted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"platkit: plat presentations, Hilden double cosets and the plat graph"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  PlatArg plat, plat2;
  auto plat_arg = [&](CLI::App* cmd, PlatArg& target, const char* name = "plat") {
    cmd->add_option(name, target.text, "plat as text (\"2 4 1 3 1\") or JSON")->required();
  };
  auto strands_opt = [&](CLI::App* cmd) { cmd->add_option("--strands", plat.strands, "strand count (default: smallest even fit)"); };

  auto* info = app.add_subcommand("info", "strands, bridge index, components, writhe");
  plat_arg(info, plat);
  strands_opt(info);

  auto* inv = app.add_subcommand("invariants", "certificate: components, coset type, Jones, Alexander");
  plat_arg(inv, plat);
  strands_opt(inv);

  std::string side = "top", gen;
  bool inverse = false;
  auto* mv = app.add_subcommand("move", "apply a Hilden catalog generator on one side");
  plat_arg(mv, plat);
  strands_opt(mv);
  mv->add_option("--side", side, "top or bottom")->check(CLI::IsMember({"top", "bottom"}));
  mv->add_option("--gen", gen, "catalog generator name (see `generators`)")->required();
  mv->add_flag("--inverse", inverse, "use the inverse generator");

  int sign = 1;
  auto* stab = app.add_subcommand("stabilize", "add a trivial bridge with one crossing");
  plat_arg(stab, plat);
  strands_opt(stab);
  stab->add_option("--sign", sign, "+1 or -1");

  bool search = false;
  BudgetArgs budget;
  auto* destab = app.add_subcommand("destabilize", "remove a trivial bridge, syntactically or by search");
  plat_arg(destab, plat);
  strands_opt(destab);
  destab->add_flag("--search", search, "fall back to destabilization_search");
  budget.attach(destab);

  auto* fl = app.add_subcommand("flip", "turn the plat upside down");
  plat_arg(fl, plat);
  strands_opt(fl);

  int bridge = 0;
  std::vector<std::string> path;
  auto* pk = app.add_subcommand("pocket", "drag one bridge along a monotone path");
  plat_arg(pk, plat);
  strands_opt(pk);
  pk->add_option("--side", side, "top or bottom")->check(CLI::IsMember({"top", "bottom"}));
  pk->add_option("--bridge", bridge, "1-based bridge index")->required();
  pk->add_option("--path", path, "steps like left:over right:under")->required();

  auto* eq = app.add_subcommand("equiv", "search for a Hilden double coset path between two plats");
  plat_arg(eq, plat, "plat1");
  plat_arg(eq, plat2, "plat2");
  strands_opt(eq);
  budget.attach(eq);

  int max_level = 0;
  bool dot = false;
  auto* gr = app.add_subcommand("graph", "explore the plat graph around a seed");
  plat_arg(gr, plat);
  strands_opt(gr);
  gr->add_option("--max-level", max_level, "highest bridge level (default seed level + 1, cap 6)");
  gr->add_flag("--dot", dot, "print the DOT rendering");
  budget.attach(gr);

  std::string out_path;
  platkit::RenderSpec spec;
  auto* rd = app.add_subcommand("render", "draw the plat as SVG");
  plat_arg(rd, plat);
  strands_opt(rd);
  rd->add_option("-o,--output", out_path, "output file (default stdout)");
  rd->add_option("--width", spec.width);
  rd->add_option("--height", spec.height);
  rd->add_option("--spacing", spec.strand_spacing);
  rd->add_option("--gap", spec.crossing_gap);
  rd->add_flag("--labels", spec.labels);

  int n = 0;
  auto* gens = app.add_subcommand("generators", "list the Hilden catalog for n bridges");
  gens->add_option("n", n, "bridge count")->required();

  auto* corpus = app.add_subcommand("corpus", "shipped plat corpus");
  corpus->require_subcommand(1);
  auto* verify = corpus->add_subcommand("verify", "run the corpus checks");
  budget.attach(verify);
  auto* list = corpus->add_subcommand("list", "print the corpus entries");

  int port = 8080;
  std::string bind = "127.0.0.1", state_dir;
  auto* serve = app.add_subcommand("serve", "run the HTTP/JSON service");
  serve->add_option("--port", port);
  serve->add_option("--bind", bind);
  serve->add_option("--state-dir", state_dir, "write finished job results here");

  CLI11_PARSE(app, argc, argv);

  try {
    Json req = Json::object();
    if (info->parsed()) {
      req["plat"] = plat_request(plat);
      const Json r = api::validate(req);
      if (as_json) return print_json(r), ok;
      std::cout << "plat: " << r.at("text").get<std::string>() << "\n"
                << "strands: " << r.at("strands") << "\nbridge index: " << r.at("bridges")
                << "\ncomponents: " << r.at("components") << "\nwrithe: " << r.at("writhe")
                << "\nexponent sum: " << r.at("exponent_sum") << "\n";
      return ok;
    }
    if (inv->parsed()) {
      req["plat"] = plat_request(plat);
      const Json r = api::invariants(req);
      if (as_json) return print_json(r), ok;
      print_certificate(r);
      return ok;
    }
    auto plat_result = [&](const Json& r) {
      if (as_json) return print_json(r), ok;
      std::cout << plat_text(r.at("plat")) << "\n";
      return ok;
    };
    if (mv->parsed()) {
      req["plat"] = plat_request(plat);
      req["side"] = side;
      req["generator"] = gen;
      req["inverse"] = inverse;
      return plat_result(api::move(req));
    }
    if (stab->parsed()) {
      req["plat"] = plat_request(plat);
      req["sign"] = sign;
      return plat_result(api::stabilize(req));
    }
    if (fl->parsed()) {
      req["plat"] = plat_request(plat);
      return plat_result(api::flip(req));
    }
    if (destab->parsed()) {
      req["plat"] = plat_request(plat);
      if (search) req["search"] = true;
      budget.into(req);
      const Json r = api::destabilize(req);
      const std::string status = r.at("status").get<std::string>();
      if (as_json) {
        print_json(r);
      } else {
        std::cout << "status: " << status << "\n";
        if (r.contains("plat")) std::cout << plat_text(r.at("plat")) << "\n";
        if (r.contains("smaller") && !r.at("smaller").is_null()) std::cout << plat_text(r.at("smaller")) << "\n";
      }
      return status == "syntactic" || status == "found" ? ok : exhausted;
    }
    if (pk->parsed()) {
      req["plat"] = plat_request(plat);
      req["side"] = side;
      req["bridge"] = bridge;
      Json steps = Json::array();
      for (const auto& s : path) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw Error("parse", "pocket step '" + s + "' must look like left:over");
        steps.push_back(Json{{"direction", s.substr(0, colon)}, {"layer", s.substr(colon + 1)}});
      }
      req["path"] = steps;
      const Json r = api::pocket(req);
      if (as_json) return print_json(r), ok;
      std::cout << plat_text(r.at("plat")) << "\n";
      for (const Json& g : r.at("trace")) {
        std::cout << "  " << g.at("name").get<std::string>() << (g.at("inverse").get<bool>() ? "^-1" : "") << "\n";
      }
      return ok;
    }
    if (eq->parsed()) {
      req["p1"] = plat_request(plat);
      req["p2"] = plat_request(PlatArg{plat2.text, plat.strands});
      budget.into(req);
      const Json r = api::equivalence(req);
      const std::string status = r.at("status").get<std::string>();
      if (as_json) {
        print_json(r);
      } else {
        std::cout << "status: " << status << "\n";
        if (r.contains("reason")) std::cout << "reason: " << r.at("reason").get<std::string>() << "\n";
        if (r.contains("trace") && !r.at("trace").is_null()) print_trace(r.at("trace"));
        std::cout << "nodes: " << r.at("stats").at("nodes") << "\n";
        if (status == "exhausted") std::cout << "note: exhaustion is not a proof of inequivalence\n";
      }
      return search_exit(status);
    }
    if (gr->parsed()) {
      req["seed"] = plat_request(plat);
      if (max_level > 0) req["max_level"] = max_level;
      budget.into(req);
      const Json r = api::explore_graph(req);
      if (as_json) return print_json(r), ok;
      if (dot) return std::cout << r.at("dot").get<std::string>(), ok;
      const Json& s = r.at("summary");
      std::cout << "vertices: " << r.at("graph").at("vertices").size() << "\nedges: "
                << r.at("graph").at("edges").size() << "\nresolved per level: "
                << s.at("resolved_per_level").dump() << "\nunresolved per level: "
                << s.at("unresolved_per_level").dump() << "\ndead-end candidates: "
                << s.at("dead_end_candidates") << "\nacyclic: " << r.at("cycle").at("acyclic") << "\n";
      return ok;
    }
    if (rd->parsed()) {
      req["plat"] = plat_request(plat);
      req["spec"] = Json{{"width", spec.width},
                         {"height", spec.height},
                         {"strand_spacing", spec.strand_spacing},
                         {"crossing_gap", spec.crossing_gap},
                         {"labels", spec.labels}};
      const std::string svg = api::render(req);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!(out << svg)) throw Error("precondition", "cannot write " + out_path);
        if (as_json) print_json(Json{{"output", out_path}, {"bytes", svg.size()}});
      }
      return ok;
    }
    if (gens->parsed()) {
      const Json r = api::generators(n);
      if (as_json) return print_json(r), ok;
      for (const Json& g : r.at("generators")) {
        std::cout << g.at("name").get<std::string>() << ": " << g.at("word").dump() << "\n";
      }
      return ok;
    }
    if (verify->parsed()) {
      Json breq = Json::object();
      budget.into(breq);
      const auto b = breq.contains("budget") ? platkit::budget_from_json(breq.at("budget"), platkit::default_budget())
                                             : platkit::default_budget();
      const Json r = api::corpus_verify(b);
      if (as_json) {
        print_json(r);
      } else {
        for (const Json& c : r.at("checks")) {
          std::cout << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
          const auto detail = c.at("detail").get<std::string>();
          if (!detail.empty()) std::cout << "  (" << detail << ")";
          std::cout << "\n";
        }
      }
      return r.at("passed").get<bool>() ? ok : corpus_failed;
    }
    if (list->parsed()) {
      Json entries = Json::array();
      for (const auto& e : api::corpus()) entries.push_back(Json{{"name", e.name}, {"plat", platkit::to_json(e.plat)}});
      if (as_json) return print_json(entries), ok;
      for (const auto& e : api::corpus()) std::cout << e.name << ": " << platkit::to_text(e.plat.word()) << "\n";
      return ok;
    }
    if (serve->parsed()) {
      platkit::ServiceOptions options;
      if (!state_dir.empty()) options.state_dir = state_dir;
      platkit::Service service(options);
      std::cerr << "platkit serving on " << bind << ":" << port << "\n";
      if (!service.listen(bind, port)) throw Error("precondition", "cannot listen on " + bind + ":" + std::to_string(port));
      return ok;
    }
  } catch (const Error& e) {
    if (as_json) {
      print_json(api::error_body(e));
    } else {
      std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    }
    return failure;
  }
  return failure;
}
