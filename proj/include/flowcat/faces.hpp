#ifndef FLOWCAT_FACES_HPP
#define FLOWCAT_FACES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "flowcat/graph.hpp"
#include "flowcat/numeric.hpp"
#include "flowcat/tableau.hpp"

namespace flowcat {

// Faces of F_{K_{n+1}}(a') correspond to a-Tesler tableaux, graded by
// tableau dimension. `a` below is always the length-n prefix (a_1..a_n).

struct TableauFace {
  TeslerTableau tableau;
  int dimension;
};

inline constexpr int default_tableau_bound = 7;

// Visits each a-valid tableau once, rows top to bottom. A row is forced
// nonzero when a_i > 0 or its column already holds a 1 above the diagonal,
// and forced zero otherwise, so every leaf of the search is valid.
// Faces of dimension above max_dimension are pruned.
void for_each_tableau(std::span<const std::int64_t> a,
                      std::optional<int> max_dimension,
                      const std::function<void(const TeslerTableau&, int)>& visit);

// Materialized enumeration. Throws LimitExceeded when n > max_n or the
// result would exceed enumeration_cap().
std::vector<TableauFace> enumerate_tableaux(
    std::span<const std::int64_t> a, std::optional<int> max_dimension = {},
    int max_n = default_tableau_bound);

// Number of a-valid tableaux of each dimension, by a row DP over the set of
// columns that already contain a 1. Supports n <= 16.
std::vector<BigInt> f_vector(std::span<const std::int64_t> a);

// Rooted forest on a subset of [n] with every child smaller than its parent.
class DecreasingForest {
 public:
  static constexpr int absent = -1;
  static constexpr int root = 0;

  explicit DecreasingForest(int n) : parent_(n, absent) {}
  // parent[v-1]: absent (-1), root (0), or the parent label (> v).
  explicit DecreasingForest(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[v - 1]; }
  bool contains(int v) const { return parent_[v - 1] != absent; }
  const std::vector<int>& parents() const { return parent_; }

  std::vector<int> vertices() const;
  std::vector<int> roots() const;
  std::vector<int> leaves() const;

  friend bool operator==(const DecreasingForest&,
                         const DecreasingForest&) = default;
  friend auto operator<=>(const DecreasingForest&,
                          const DecreasingForest&) = default;

 private:
  std::vector<int> parent_;
};

// supp(a) is contained in the vertex set and every leaf lies in supp(a).
bool forest_is_admissible(const DecreasingForest& forest,
                          std::span<const std::int64_t> a);

// Dimension-0 a-Tesler tableau -> forest: nonzero rows become vertices, an
// off-diagonal 1 at (i,j) makes j the parent of i, a diagonal 1 a root.
// Throws InvalidInput if T is not a-valid of dimension 0.
DecreasingForest tableau_to_forest(const TeslerTableau& tableau,
                                   std::span<const std::int64_t> a);
// Inverse map. Throws InvalidInput when the forest is malformed.
TeslerTableau forest_to_tableau(const DecreasingForest& forest);

// Independent enumeration of the admissible forests (parent choices from the
// top label down, filtered by forest_is_admissible).
std::vector<DecreasingForest> enumerate_admissible_forests(
    std::span<const std::int64_t> a);

// Vertices of F_G(a') found directly as a'-flows whose support is a forest.
// G must be simple (all multiplicities 1) with at most 24 edges.
std::size_t count_vertices_by_acyclic_support(const Multigraph& graph,
                                              const NetflowVector& netflow);

// 2^{r+1} 3^s: vertex count for the netflow (1, 0^r, 1, 0^s, -2).
BigInt vertex_count_formula(std::int64_t r, std::int64_t s);
// 2 * 3^{n-2}: vertex count for (1, 1, 0, ..., 0, -2) on K_{n+1}.
BigInt catalan_polytope_vertices(int n);

}  // namespace flowcat

#endif
