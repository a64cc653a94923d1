#include "flowcat/json_io.hpp"

#include <fstream>

#include "flowcat/errors.hpp"

namespace flowcat {

using nlohmann::json;

Multigraph graph_from_json(const json& doc) {
  try {
    const int vertices = doc.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw InvalidInput("each edge must be [source, target, multiplicity]");
      }
      edges.push_back({e[0].get<int>(), e[1].get<int>(),
                       e[2].get<std::int64_t>()});
    }
    return Multigraph(vertices, std::move(edges));
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed graph JSON: ") + ex.what());
  }
}

json graph_to_json(const Multigraph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back({e.source, e.target, e.multiplicity});
  }
  return {{"vertices", graph.vertex_count()}, {"edges", edges}};
}

Multigraph load_graph(const std::string& spec) {
  const std::string prefix = "file:";
  if (spec.rfind(prefix, 0) != 0) return parse_graph_spec(spec);
  const std::string path = spec.substr(prefix.size());
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw InvalidInput("graph file '" + path + "' is not JSON: " + ex.what());
  }
  return graph_from_json(doc);
}

CTIntegrand integrand_from_json(const json& doc) {
  try {
    CTIntegrand f;
    f.n_vars = doc.at("vars").get<int>();
    for (const auto& term : doc.at("numerator")) {
      if (!term.is_array() || term.size() != 2) {
        throw InvalidInput("numerator terms must be [coeff, [exponents]]");
      }
      Monomial mono;
      mono.coefficient = term[0].is_string()
                             ? BigInt(term[0].get<std::string>())
                             : BigInt(term[0].get<std::int64_t>());
      mono.exponents = term[1].get<std::vector<std::int64_t>>();
      f.numerator.push_back(std::move(mono));
    }
    f.x_pole = doc.value("x_pole", std::vector<std::int64_t>(f.n_vars, 0));
    f.one_minus_pole =
        doc.value("one_minus_pole", std::vector<std::int64_t>(f.n_vars, 0));
    f.vandermonde_power = doc.value("vandermonde", std::int64_t{0});
    f.validate();
    return f;
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed integrand JSON: ") + ex.what());
  } catch (const std::runtime_error& ex) {
    // Bad decimal coefficient strings surface here.
    throw InvalidInput(std::string("malformed integrand JSON: ") + ex.what());
  }
}

json integrand_to_json(const CTIntegrand& f) {
  json numerator = json::array();
  for (const Monomial& m : f.numerator) {
    numerator.push_back({m.coefficient.str(), m.exponents});
  }
  return {{"vars", f.n_vars},
          {"numerator", numerator},
          {"x_pole", f.x_pole},
          {"one_minus_pole", f.one_minus_pole},
          {"vandermonde", f.vandermonde_power}};
}

json tableau_to_json(const TeslerTableau& tableau) {
  json cells = json::array();
  for (auto [i, j] : tableau.cells()) cells.push_back({i, j});
  return cells;
}

json forest_to_json(const DecreasingForest& forest) {
  json vertices = json::array();
  json parents = json::array();
  for (int v : forest.vertices()) {
    vertices.push_back(v);
    parents.push_back(forest.parent(v));
  }
  return {{"vertices", vertices}, {"parents", parents}};
}

}  // namespace flowcat
