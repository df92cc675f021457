#pragma once

// Structured JSON formats shared by the CLI and the service.
//
// Plat: { "strands": 2n, "word": [signed letters], "convention": "standard-cups" }.
// Parsers throw Error("parse") on malformed input.

#include <json.hpp>
#include "platkit/invariants.hpp"
#include "platkit/laurent.hpp"
#include "platkit/plat.hpp"
#include "platkit/platgraph.hpp"
#include "platkit/search.hpp"

namespace platkit {

using Json = nlohmann::ordered_json;

Json to_json(const BraidWord& w);  // signed letters
Json to_json(const Plat& p);
Json to_json(const LaurentPolynomial& p);
Json to_json(const CosetType& c);
Json to_json(const InvariantCertificate& c);
Json to_json(const HildenCatalog& c);
Json to_json(const GeneratorUse& g);
Json to_json(const Move& m);
Json to_json(const MoveTrace& t);
Json to_json(const SearchBudget& b);
Json to_json(const SearchStats& s);
Json to_json(const EquivalenceResult& r);
Json to_json(const DestabilizationResult& r);
Json to_json(const PocketResult& r);
Json to_json(const PlatGraph& g);
Json to_json(const CycleReport& c);
Json to_json(const GraphSummary& s);

/// Accepts the structured object or a string in canonical text form.
Plat plat_from_json(const Json& j);
LaurentPolynomial polynomial_from_json(const Json& j);
InvariantCertificate certificate_from_json(const Json& j);
GeneratorUse generator_use_from_json(const Json& j);
Move move_from_json(const Json& j);
MoveTrace trace_from_json(const Json& j);
/// Missing fields keep `defaults`.
SearchBudget budget_from_json(const Json& j, const SearchBudget& defaults);
PocketStep pocket_step_from_json(const Json& j);
PlatGraph graph_from_json(const Json& j);

}  // namespace platkit
