#pragma once

#include <string>

#include "json.hpp"
#include "rainbow/cb.hpp"
#include "rainbow/characteristics.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/extraction.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/nwd.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

using Json = nlohmann::json;

// One structured-text format family across all modules: every object is a
// JSON document with a "format" discriminator. Parsers reject incomplete
// documents (a coloring must cover every pair exactly once).

Json coloring_to_json(const PairColoring& c);
PairColoring coloring_from_json(const Json& j);

Json certificate_to_json(const ExtractionCertificate& cert);
ExtractionCertificate certificate_from_json(const Json& j);

Json interval_system_to_json(const IntervalSystem& sys);

Json unary_coloring_to_json(const UnaryColoring& u);
UnaryColoring unary_coloring_from_json(const Json& j);

Json finite_function_to_json(const FiniteFunction& f);
FiniteFunction finite_function_from_json(const Json& j);

Json slalom_to_json(const Slalom& s);
Slalom slalom_from_json(const Json& j);

Json set_description_to_json(const SetDescription& d);
SetDescription set_description_from_json(const Json& j);

Json search_result_to_json(const SearchResult& r);

void save_json(const std::string& path, const Json& j);
Json load_json(const std::string& path);  // throws parse_error
void save_text(const std::string& path, const std::string& body);

/// Report payloads compare equal across re-runs with one configuration;
/// timing lives in a separate field which comparisons strip.
Json strip_timing(Json report);

}  // namespace rainbow
