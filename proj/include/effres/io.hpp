#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "effres/census.hpp"
#include "effres/constructor.hpp"
#include "effres/decomposer.hpp"
#include "effres/marked_graph.hpp"

namespace effres {

/// {"n": int, "edges": [[u, v], ...], "marked": index}
nlohmann::json graph_to_json(const MarkedGraph& g);
/// Throws std::invalid_argument on malformed input (after validate()).
MarkedGraph graph_from_json(const nlohmann::json& j);

/// Graphviz with the marked edge drawn bold and red.
std::string graph_to_dot(const MarkedGraph& g, const std::string& name = "G");

nlohmann::json audit_to_json(const Audit& a);
nlohmann::json decomposition_to_json(const Decomposition& d);
/// Big integers are decimal strings, rationals are "p/q" strings.
nlohmann::json certificate_to_json(const Certificate& cert);

/// Header t,c,strategy,V,E,bound_value,size_ratio.
void write_census_csv(std::ostream& out, const CensusSummary& summary);

}  // namespace effres
