#pragma once

// Request/response layer shared by the CLI and the HTTP service. Every
// operation takes a JSON request and returns a JSON body, and dump() is the
// single serializer, so both front ends emit identical bytes.
//
// A request's plat lives under "plat" (or "p1"/"p2", "seed"); a bare plat
// object is accepted where only one plat is needed. Errors are thrown as
// platkit::Error and rendered by error_body().

#include <string>
#include <vector>

#include "platkit/error.hpp"
#include "platkit/json.hpp"
#include "platkit/render.hpp"

namespace platkit::api {

std::string dump(const Json& j);

Json error_body(const Error& e);
/// parse -> 400, not_found -> 404, anything else -> 422.
int http_status(const Error& e);

Json validate(const Json& req);     // strands, bridges, components, writhe, exponent_sum
Json invariants(const Json& req);   // the certificate
Json move(const Json& req);         // side, generator, inverse
Json stabilize(const Json& req);    // sign (default +1)
Json destabilize(const Json& req);  // syntactic first; "search": true adds destabilization_search
Json flip(const Json& req);
Json pocket(const Json& req);       // side, bridge, path: [{direction, layer}]
std::string render(const Json& req);  // optional "spec": RenderSpec fields
Json equivalence(const Json& req);  // p1, p2, optional budget
Json generators(int n);
Json explore_graph(const Json& req);  // seed, max_level, optional budget

RenderSpec render_spec_from_json(const Json& j);

struct CorpusEntry {
  std::string name;
  Plat plat;
};

/// The shipped corpus, embedded at build time.
const char* corpus_text();
std::vector<CorpusEntry> parse_corpus(const std::string& text);
std::vector<CorpusEntry> corpus();

/// Runs the corpus checks; "passed" is true only when every check passed.
Json corpus_verify(const SearchBudget& budget);

}  // namespace platkit::api
