#ifndef FLOWCAT_GRAPH_HPP
#define FLOWCAT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flowcat {

// Directed edge i -> j (1-based labels, i < j) carried with a multiplicity.
struct Edge {
  int source = 0;
  int target = 0;
  std::int64_t multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loopless multigraph on vertices 1..vertex_count with every edge pointing
// from a smaller to a larger label. Parallel entries are merged on
// construction and zero-multiplicity entries dropped, so edges() is sorted by
// (source, target) with no duplicates.
class Multigraph {
 public:
  Multigraph() : Multigraph(1, {}) {}
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // N = total number of edges counted with multiplicity.
  std::int64_t edge_count() const { return edge_count_; }

  std::int64_t multiplicity(int source, int target) const;

  // Out/in degree of each vertex, counted with multiplicity (index 0 is
  // vertex 1).
  std::vector<std::int64_t> out_degrees() const;
  std::vector<std::int64_t> in_degrees() const;

  // Induced subgraph on vertices 1..k.
  Multigraph restricted_to_prefix(int k) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::int64_t edge_count_ = 0;
};

enum class GraphKind { complete, morris, tesler, custom };

// complete: params = {n+1}
// morris:   params = {n+1, a, b, m}
// tesler:   params = {n+1, a, b}
// custom:   params = {vertices, s1, t1, m1, s2, t2, m2, ...}
Multigraph build_graph(GraphKind kind, std::span<const std::int64_t> params);

Multigraph complete_graph(int vertices);
// (1,i) x a and (i,n+1) x b for i in [2,n]; (i,j) x m for 1<i<j<n+1.
// There is no (1,n+1) edge.
Multigraph morris_graph(int vertices, std::int64_t a, std::int64_t b,
                        std::int64_t m);
// (i,j) x a for 1<=i<j<=n; (i,n+1) x b for i in [n].
Multigraph tesler_graph(int vertices, std::int64_t a, std::int64_t b);

// Parses "complete:5", "morris:5,1,2,1", "tesler:4,2,1". The "file:" form is
// handled by the JSON layer.
Multigraph parse_graph_spec(const std::string& spec);

struct DegreeOffsets {
  // t_i = outdegree(i) - 1 for the first n = vertex_count - 1 vertices.
  std::vector<std::int64_t> out_offsets;
  // d_i = indegree(i) - 1 for every vertex.
  std::vector<std::int64_t> in_offsets;
};

DegreeOffsets degree_offsets(const Multigraph& graph);

// Structural recognition of the named families. A complete graph is reported
// as complete; it is also tesler(n+1, 1, 1).
struct FamilyMatch {
  GraphKind kind = GraphKind::custom;
  int vertices = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t m = 0;
};

FamilyMatch classify(const Multigraph& graph);
bool is_tesler_family(const Multigraph& graph, std::int64_t& a,
                      std::int64_t& b);
bool is_morris_family(const Multigraph& graph, std::int64_t& a,
                      std::int64_t& b, std::int64_t& m);

// Netflow a' = (a_1, ..., a_n, -sum a_i).
class NetflowVector {
 public:
  explicit NetflowVector(std::vector<std::int64_t> entries);
  static NetflowVector from_prefix(std::span<const std::int64_t> prefix);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const std::int64_t> prefix() const {
    return {entries_.data(), entries_.size() - 1};
  }
  // True when every entry but the last is >= 0.
  bool is_source_nonnegative() const;

 private:
  std::vector<std::int64_t> entries_;
};

}  // namespace flowcat

#endif
