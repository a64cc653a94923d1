#ifndef FLOWCAT_JSON_IO_HPP
#define FLOWCAT_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "flowcat/ctengine.hpp"
#include "flowcat/faces.hpp"
#include "flowcat/graph.hpp"

namespace flowcat {

// {"vertices": n+1, "edges": [[i, j, mult], ...]}
Multigraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const Multigraph& graph);

// Accepts the named-family grammar plus "file:<path>".
Multigraph load_graph(const std::string& spec);

// {"vars": n, "numerator": [[coeff, [e1..en]], ...], "x_pole": [...],
//  "one_minus_pole": [...], "vandermonde": m}
// Coefficients may be JSON integers or decimal strings.
CTIntegrand integrand_from_json(const nlohmann::json& doc);
nlohmann::json integrand_to_json(const CTIntegrand& integrand);

// [[i, j], ...] cells holding a 1.
nlohmann::json tableau_to_json(const TeslerTableau& tableau);
// {"vertices": [...], "parents": [...]}, parent 0 marks a root.
nlohmann::json forest_to_json(const DecreasingForest& forest);

}  // namespace flowcat

#endif
