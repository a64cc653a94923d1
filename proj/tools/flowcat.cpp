// flowcat: volumes, lattice points, vertices and constant terms of flow
// polytopes from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flowcat/closedform.hpp"
#include "flowcat/ctengine.hpp"
#include "flowcat/ehrhart.hpp"
#include "flowcat/errors.hpp"
#include "flowcat/faces.hpp"
#include "flowcat/graph.hpp"
#include "flowcat/json_io.hpp"
#include "flowcat/kostant.hpp"
#include "flowcat/lidskii.hpp"
#include "flowcat/suites.hpp"

namespace {

using nlohmann::json;
using namespace flowcat;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_mismatch = 2;

enum class Format { json, text, csv };

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw InvalidInput("bad integer '" + item + "' in list '" + text + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + std::to_string(v[i]);
  }
  return out;
}

NetflowVector netflow_for(const Multigraph& g, const std::string& text) {
  auto entries = parse_list(text);
  if (static_cast<int>(entries.size()) != g.vertex_count()) {
    throw InvalidInput("netflow has " + std::to_string(entries.size()) +
                       " entries but the graph has " +
                       std::to_string(g.vertex_count()) + " vertices");
  }
  return NetflowVector(std::move(entries));
}

// Tableau commands take the source part a_1..a_n; a trailing sink entry is
// accepted when it is negative.
std::vector<std::int64_t> tableau_netflow(const std::string& text) {
  auto a = parse_list(text);
  if (a.size() >= 2 && a.back() < 0) a.pop_back();
  for (auto x : a) {
    if (x < 0) throw InvalidInput("tableau netflow entries must be >= 0");
  }
  return a;
}

bool is_pattern(const std::vector<std::int64_t>& v,
                const std::vector<std::int64_t>& want) {
  return v == want;
}

std::vector<std::int64_t> pattern(int n, std::vector<std::int64_t> head) {
  std::vector<std::int64_t> v(n + 1, 0);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < head.size() && i < v.size(); ++i) {
    v[i] = head[i];
    sum += head[i];
  }
  v[n] = -sum;
  return v;
}

// Constant-term and closed-form routes exist only for the families with a
// known integrand; nullopt means the method does not apply.
struct FamilyRoutes {
  std::optional<std::string> ct;
  std::optional<std::string> closed;
};

FamilyRoutes family_routes(const Multigraph& g, const NetflowVector& net) {
  FamilyRoutes out;
  const FamilyMatch f = classify(g);
  const int n = g.vertex_count() - 1;
  const auto& v = net.entries();
  if (n < 1) return out;
  const auto unit = pattern(n, {1});
  const auto all_ones = pattern(n, std::vector<std::int64_t>(n, 1));

  if (f.kind == GraphKind::complete) {
    if (n >= 2 && is_pattern(v, pattern(n, {1, 1}))) {
      out.ct = catalan_polytope_ct(n).str();
      out.closed = thm1_volume(n).str();
      return out;
    }
    if (n >= 2 && is_pattern(v, unit)) {
      out.ct = to_decimal(morris_ct(n - 2, 0, 2, 1));
      out.closed = cry_product(n).str();
      return out;
    }
  }
  if ((f.kind == GraphKind::complete || f.kind == GraphKind::tesler) &&
      is_pattern(v, all_ones) && n >= 1) {
    const std::int64_t a = f.kind == GraphKind::complete ? 1 : f.a;
    const std::int64_t b = f.kind == GraphKind::complete ? 1 : f.b;
    out.ct = tesler_ct(n, a, b).str();
    out.closed = to_decimal(thm3_volume(n, a, b));
    return out;
  }
  if (f.kind == GraphKind::morris && is_pattern(v, unit) && f.a >= 1 &&
      n >= 2) {
    out.ct = to_decimal(morris_ct(n - 1, f.a - 1, f.b, f.m));
    out.closed = to_decimal(thm2_volume(n, f.a, f.b, f.m));
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_table(Format format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows,
                const json& doc) {
  if (format == Format::json) {
    std::cout << doc.dump() << "\n";
    return;
  }
  const char sep = format == Format::csv ? ',' : ' ';
  if (format == Format::csv) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      std::cout << (i ? "," : "") << csv_escape(header[i]);
    }
    std::cout << "\n";
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) std::cout << sep;
      std::cout << (format == Format::csv ? csv_escape(row[i]) : row[i]);
    }
    std::cout << "\n";
  }
}

int run_volume(const std::string& graph_spec, const std::string& netflow_text,
               std::vector<std::string> methods, Format format) {
  const Multigraph g = load_graph(graph_spec);
  const NetflowVector net = netflow_for(g, netflow_text);
  if (methods.empty()) methods = {"lidskii"};

  std::map<std::string, std::string> values;
  std::optional<FamilyRoutes> routes;
  for (const auto& m : methods) {
    if (values.count(m)) continue;
    if (m == "lidskii") {
      values[m] = lidskii_volume(g, net).str();
    } else if (m == "ehrhart") {
      values[m] = ehrhart_polynomial(g, net).normalized_volume().str();
    } else {
      if (!routes) routes = family_routes(g, net);
      const auto& value = m == "ct" ? routes->ct : routes->closed;
      if (!value) {
        throw InvalidInput("method '" + m +
                           "' has no formula for this graph and netflow");
      }
      values[m] = *value;
    }
  }
  bool agreement = true;
  for (const auto& [m, v] : values) {
    agreement = agreement && v == values.begin()->second;
  }

  json doc;
  doc["agreement"] = agreement;
  doc["graph"] = graph_to_json(g);
  doc["netflow"] = net.entries();
  doc["methods"] = values;
  doc["volume"] = agreement ? json(values.begin()->second) : json(nullptr);

  std::vector<std::vector<std::string>> rows;
  for (const auto& [m, v] : values) rows.push_back({m, v});
  if (format == Format::text && agreement && values.size() == 1) {
    std::cout << values.begin()->second << "\n";
  } else {
    emit_table(format, {"method", "volume"}, rows, doc);
    if (format == Format::text && values.size() > 1) {
      std::cout << "agreement " << (agreement ? "yes" : "no") << "\n";
    }
  }
  return agreement ? exit_ok : exit_mismatch;
}

int run_points(const std::string& graph_spec, const std::string& netflow_text,
               std::vector<std::string> methods, Format format) {
  const Multigraph g = load_graph(graph_spec);
  const NetflowVector net = netflow_for(g, netflow_text);
  if (methods.empty()) methods = {"kostant"};

  std::map<std::string, std::string> values;
  for (const auto& m : methods) {
    if (m == "kostant") {
      values[m] = kostant(g, net.entries()).str();
    } else if (m == "lidskii") {
      values[m] = lidskii_points(g, net).str();
    } else if (m == "ehrhart") {
      values[m] = to_decimal(ehrhart_polynomial(g, net).evaluate(1));
    } else {
      throw InvalidInput("points supports kostant, lidskii and ehrhart");
    }
  }
  bool agreement = true;
  for (const auto& [m, v] : values) {
    agreement = agreement && v == values.begin()->second;
  }
  json doc;
  doc["agreement"] = agreement;
  doc["methods"] = values;
  doc["points"] = agreement ? json(values.begin()->second) : json(nullptr);
  std::vector<std::vector<std::string>> rows;
  for (const auto& [m, v] : values) rows.push_back({m, v});
  if (format == Format::text && values.size() == 1) {
    std::cout << values.begin()->second << "\n";
  } else {
    emit_table(format, {"method", "points"}, rows, doc);
  }
  return agreement ? exit_ok : exit_mismatch;
}

int run_vertices(const std::string& netflow_text, bool count_only,
                 Format format) {
  const auto a = tableau_netflow(netflow_text);
  const auto faces = enumerate_tableaux(a, 0, TeslerTableau::max_size);
  if (count_only) {
    if (format == Format::json) {
      std::cout << json{{"count", faces.size()}}.dump() << "\n";
    } else if (format == Format::csv) {
      std::cout << "count\n" << faces.size() << "\n";
    } else {
      std::cout << faces.size() << "\n";
    }
    return exit_ok;
  }
  json list = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& face : faces) {
    const DecreasingForest forest = tableau_to_forest(face.tableau, a);
    json entry{{"tableau", tableau_to_json(face.tableau)},
               {"forest", forest_to_json(forest)}};
    std::vector<std::int64_t> parents(forest.parents().begin(),
                                      forest.parents().end());
    rows.push_back({tableau_to_json(face.tableau).dump(), join(parents)});
    list.push_back(std::move(entry));
  }
  json doc{{"count", faces.size()}, {"netflow", a}, {"vertices", list}};
  emit_table(format, {"tableau", "parents"}, rows, doc);
  return exit_ok;
}

int run_fvector(const std::string& netflow_text, Format format) {
  const auto a = tableau_netflow(netflow_text);
  const auto f = f_vector(a);
  std::vector<std::string> values;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t d = 0; d < f.size(); ++d) {
    values.push_back(f[d].str());
    rows.push_back({std::to_string(d), f[d].str()});
  }
  json doc{{"fvector", values}, {"netflow", a}};
  if (format == Format::text) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << (i ? " " : "") << values[i];
    }
    std::cout << "\n";
  } else {
    emit_table(format, {"dimension", "faces"}, rows, doc);
  }
  return exit_ok;
}

int run_ct(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open integrand file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed integrand JSON: ") + ex.what());
  }
  const CTIntegrand integrand = integrand_from_json(doc);
  const std::string value = constant_term(integrand).str();
  if (format == Format::json) {
    std::cout << json{{"constant_term", value}}.dump() << "\n";
  } else if (format == Format::csv) {
    std::cout << "constant_term\n" << value << "\n";
  } else {
    std::cout << value << "\n";
  }
  return exit_ok;
}

int run_verify(const std::string& suite, int max_n, Format format) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names = {suite};
  }
  bool all_ok = true;
  json reports = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& name : names) {
    const SuiteReport rep = run_suite(name, max_n);
    all_ok = all_ok && rep.ok();
    json checks = json::array();
    for (const auto& row : rep.rows) {
      checks.push_back(
          {{"label", row.label}, {"ok", row.ok}, {"values", row.values}});
      std::string joined;
      for (std::size_t i = 0; i < row.values.size(); ++i) {
        joined += (i ? " " : "") + row.values[i];
      }
      rows.push_back({name, row.label, row.ok ? "ok" : "MISMATCH", joined});
    }
    reports.push_back({{"checks", checks},
                       {"ok", rep.ok()},
                       {"suite", name}});
  }
  json doc{{"ok", all_ok}, {"suites", reports}};
  if (format == Format::text) {
    for (const auto& r : rows) {
      std::cout << r[2] << "  " << r[1] << "  " << r[3] << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "verification FAILED")
              << " (" << rows.size() << " checks)\n";
  } else {
    emit_table(format, {"suite", "label", "status", "values"}, rows, doc);
  }
  return all_ok ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact volumes, lattice points and faces of flow polytopes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  std::string graph_spec;
  std::string netflow_text;
  std::vector<std::string> methods;

  auto* volume = app.add_subcommand("volume", "Normalized volume of F_G(a)");
  volume->add_option("--graph", graph_spec,
                     "complete:<n+1> | morris:<n+1>,a,b,m | tesler:<n+1>,a,b "
                     "| file:<path>")
      ->required();
  volume->add_option("--netflow", netflow_text, "Comma-separated netflow")
      ->required();
  volume->add_option("--method", methods, "lidskii | ehrhart | ct | closed")
      ->check(CLI::IsMember({"lidskii", "ehrhart", "ct", "closed"}));

  std::vector<std::string> point_methods;
  auto* points = app.add_subcommand("points", "Lattice points of F_G(a)");
  points->add_option("--graph", graph_spec, "Graph spec")->required();
  points->add_option("--netflow", netflow_text, "Comma-separated netflow")
      ->required();
  points->add_option("--method", point_methods, "kostant | lidskii | ehrhart")
      ->check(CLI::IsMember({"kostant", "lidskii", "ehrhart"}));

  bool count_only = false;
  auto* vertices =
      app.add_subcommand("vertices", "Vertices of F_{K_{n+1}}(a) as tableaux");
  vertices->add_option("--netflow", netflow_text, "a_1,...,a_n (sink optional)")
      ->required();
  auto* count_flag =
      vertices->add_flag("--count-only", count_only, "Print only the count");
  vertices->add_flag("--enumerate", "List tableaux and forests (default)")
      ->excludes(count_flag);

  auto* fvector = app.add_subcommand("fvector", "Face counts by dimension");
  fvector->add_option("--netflow", netflow_text, "a_1,...,a_n (sink optional)")
      ->required();

  std::string integrand_path;
  auto* ct = app.add_subcommand("ct", "Constant term of an integrand");
  ct->add_option("integrand", integrand_path, "Integrand JSON file")
      ->required();

  std::string suite;
  int max_n = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-n", max_n, "Sweep bound (0 = suite default)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  const Format format = format_name == "json"  ? Format::json
                        : format_name == "csv" ? Format::csv
                                               : Format::text;
  try {
    if (*volume) return run_volume(graph_spec, netflow_text, methods, format);
    if (*points) {
      return run_points(graph_spec, netflow_text, point_methods, format);
    }
    if (*vertices) return run_vertices(netflow_text, count_only, format);
    if (*fvector) return run_fvector(netflow_text, format);
    if (*ct) return run_ct(integrand_path, format);
    if (*verify) return run_verify(suite, max_n, format);
  } catch (const InvalidInput& e) {
    std::cerr << "flowcat: " << e.what() << "\n";
    return exit_invalid;
  } catch (const LimitExceeded& e) {
    std::cerr << "flowcat: " << e.what() << "\n";
    return exit_invalid;
  } catch (const DefectDetected& e) {
    std::cerr << "flowcat: defect: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_ok;
}
