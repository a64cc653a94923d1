#include "flowcat/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "flowcat/errors.hpp"

namespace flowcat {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw InvalidInput("graph needs at least one vertex");
  std::map<std::pair<int, int>, std::int64_t> merged;
  for (const Edge& e : edges) {
    if (e.source < 1 || e.target < 1 || e.source > vertex_count ||
        e.target > vertex_count) {
      throw InvalidInput("edge (" + std::to_string(e.source) + "," +
                         std::to_string(e.target) + ") has a vertex label "
                         "outside 1.." + std::to_string(vertex_count));
    }
    if (e.source >= e.target) {
      throw InvalidInput("edge (" + std::to_string(e.source) + "," +
                         std::to_string(e.target) +
                         ") must satisfy source < target");
    }
    if (e.multiplicity < 0) throw InvalidInput("negative edge multiplicity");
    merged[{e.source, e.target}] += e.multiplicity;
  }
  for (const auto& [key, mult] : merged) {
    if (mult == 0) continue;
    edges_.push_back({key.first, key.second, mult});
    edge_count_ += mult;
  }
}

std::int64_t Multigraph::multiplicity(int source, int target) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair{source, target},
      [](const Edge& e, const std::pair<int, int>& key) {
        return std::pair{e.source, e.target} < key;
      });
  if (it != edges_.end() && it->source == source && it->target == target) {
    return it->multiplicity;
  }
  return 0;
}

std::vector<std::int64_t> Multigraph::out_degrees() const {
  std::vector<std::int64_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) deg[e.source - 1] += e.multiplicity;
  return deg;
}

std::vector<std::int64_t> Multigraph::in_degrees() const {
  std::vector<std::int64_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) deg[e.target - 1] += e.multiplicity;
  return deg;
}

Multigraph Multigraph::restricted_to_prefix(int k) const {
  if (k < 1 || k > vertex_count_) {
    throw InvalidInput("restriction size out of range");
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (e.target <= k) kept.push_back(e);
  }
  return Multigraph(k, std::move(kept));
}

Multigraph complete_graph(int vertices) {
  if (vertices < 2) throw InvalidInput("complete graph needs n+1 >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i <= vertices; ++i) {
    for (int j = i + 1; j <= vertices; ++j) edges.push_back({i, j, 1});
  }
  return Multigraph(vertices, std::move(edges));
}

Multigraph morris_graph(int vertices, std::int64_t a, std::int64_t b,
                        std::int64_t m) {
  if (vertices < 2) throw InvalidInput("morris graph needs n+1 >= 2");
  if (a < 0 || b < 0 || m < 0) {
    throw InvalidInput("morris multiplicities must be nonnegative");
  }
  const int n = vertices - 1;
  std::vector<Edge> edges;
  for (int i = 2; i <= n; ++i) {
    edges.push_back({1, i, a});
    edges.push_back({i, vertices, b});
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j, m});
  }
  return Multigraph(vertices, std::move(edges));
}

Multigraph tesler_graph(int vertices, std::int64_t a, std::int64_t b) {
  if (vertices < 2) throw InvalidInput("tesler graph needs n+1 >= 2");
  if (a < 0 || b < 0) {
    throw InvalidInput("tesler multiplicities must be nonnegative");
  }
  const int n = vertices - 1;
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j, a});
    edges.push_back({i, vertices, b});
  }
  return Multigraph(vertices, std::move(edges));
}

namespace {

int checked_vertices(std::int64_t v) {
  if (v < 1 || v > 1'000'000) throw InvalidInput("vertex count out of range");
  return static_cast<int>(v);
}

}  // namespace

Multigraph build_graph(GraphKind kind, std::span<const std::int64_t> params) {
  auto arity = [&](std::size_t want, const char* name) {
    if (params.size() != want) {
      throw InvalidInput(std::string(name) + " expects " +
                         std::to_string(want) + " parameters, got " +
                         std::to_string(params.size()));
    }
  };
  switch (kind) {
    case GraphKind::complete:
      arity(1, "complete");
      return complete_graph(checked_vertices(params[0]));
    case GraphKind::morris:
      arity(4, "morris");
      return morris_graph(checked_vertices(params[0]), params[1], params[2],
                          params[3]);
    case GraphKind::tesler:
      arity(3, "tesler");
      return tesler_graph(checked_vertices(params[0]), params[1], params[2]);
    case GraphKind::custom: {
      if (params.empty() || (params.size() - 1) % 3 != 0) {
        throw InvalidInput(
            "custom expects vertices followed by (source, target, mult) "
            "triples");
      }
      std::vector<Edge> edges;
      for (std::size_t i = 1; i < params.size(); i += 3) {
        edges.push_back({static_cast<int>(params[i]),
                         static_cast<int>(params[i + 1]), params[i + 2]});
      }
      return Multigraph(checked_vertices(params[0]), std::move(edges));
    }
  }
  throw InvalidInput("unknown graph kind");
}

Multigraph parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw InvalidInput("graph spec must look like kind:params, got '" + spec +
                       "'");
  }
  const std::string kind = spec.substr(0, colon);
  std::vector<std::int64_t> params;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("bad integer '" + item + "' in graph spec");
    }
  }
  if (kind == "complete") return build_graph(GraphKind::complete, params);
  if (kind == "morris") return build_graph(GraphKind::morris, params);
  if (kind == "tesler") return build_graph(GraphKind::tesler, params);
  throw InvalidInput("unknown graph kind '" + kind + "'");
}

DegreeOffsets degree_offsets(const Multigraph& graph) {
  DegreeOffsets result;
  const auto out = graph.out_degrees();
  const auto in = graph.in_degrees();
  result.out_offsets.reserve(out.size() - 1);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    result.out_offsets.push_back(out[i] - 1);
  }
  for (std::int64_t d : in) result.in_offsets.push_back(d - 1);
  return result;
}

bool is_tesler_family(const Multigraph& graph, std::int64_t& a,
                      std::int64_t& b) {
  const int v = graph.vertex_count();
  const int n = v - 1;
  if (n < 1) return false;
  b = graph.multiplicity(1, v);
  a = n >= 2 ? graph.multiplicity(1, 2) : 0;
  if (b == 0) return false;
  return graph == tesler_graph(v, a, b);
}

bool is_morris_family(const Multigraph& graph, std::int64_t& a,
                      std::int64_t& b, std::int64_t& m) {
  const int v = graph.vertex_count();
  const int n = v - 1;
  if (n < 2) return false;
  a = graph.multiplicity(1, 2);
  b = graph.multiplicity(2, v);
  m = n >= 3 ? graph.multiplicity(2, 3) : 1;
  if (a == 0 || b == 0 || m == 0) return false;
  return graph == morris_graph(v, a, b, m);
}

FamilyMatch classify(const Multigraph& graph) {
  FamilyMatch match;
  match.vertices = graph.vertex_count();
  if (graph.vertex_count() >= 2 &&
      graph == complete_graph(graph.vertex_count())) {
    match.kind = GraphKind::complete;
    match.a = match.b = match.m = 1;
    return match;
  }
  if (is_tesler_family(graph, match.a, match.b)) {
    match.kind = GraphKind::tesler;
    return match;
  }
  if (is_morris_family(graph, match.a, match.b, match.m)) {
    match.kind = GraphKind::morris;
    return match;
  }
  match.a = match.b = match.m = 0;
  return match;
}

NetflowVector::NetflowVector(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("netflow must be nonempty");
  const std::int64_t total =
      std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
  if (total != 0) {
    throw InvalidInput("netflow entries must sum to zero (sum is " +
                       std::to_string(total) + ")");
  }
}

NetflowVector NetflowVector::from_prefix(std::span<const std::int64_t> prefix) {
  std::vector<std::int64_t> entries(prefix.begin(), prefix.end());
  const std::int64_t total =
      std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
  entries.push_back(-total);
  return NetflowVector(std::move(entries));
}

bool NetflowVector::is_source_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end() - 1,
                     [](std::int64_t x) { return x >= 0; });
}

}  // namespace flowcat
