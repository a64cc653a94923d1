#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "flowcat/errors.hpp"
#include "flowcat/faces.hpp"
#include "flowcat/graph.hpp"
#include "flowcat/tableau.hpp"
#include "oracles/brute_flows.hpp"
#include "oracles/tableau_brute.hpp"

using namespace flowcat;
using Vec = std::vector<std::int64_t>;
using Cells = std::vector<std::pair<int, int>>;

namespace {

// Calls visit(a) for every a in {0..hi}^n.
template <class Visit>
void for_each_vector(int n, std::int64_t hi, Visit&& visit) {
  Vec a(n, 0);
  while (true) {
    visit(a);
    int k = 0;
    while (k < n && a[k] == hi) a[k++] = 0;
    if (k == n) return;
    ++a[k];
  }
}

TeslerTableau from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Cells ones;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (rows[i - 1][j - i]) ones.push_back({i, j});
    }
  }
  return TeslerTableau::from_cells(n, ones);
}

std::size_t oracle_vertices(const Vec& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::array<std::int64_t, 3>> edges;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) edges.push_back({i, j, 1});
  Vec b(a);
  std::int64_t sum = 0;
  for (auto x : a) sum += x;
  b.push_back(-sum);
  return oracle::count_forest_supported_flows(n + 1, oracle::unit_slots(edges), b);
}

}  // namespace

TEST_CASE("example tableaux have the stated dimensions") {
  const Vec a{7, 0, 3, 0};
  const auto t1 = from_rows({{0, 1, 1, 1}, {0, 0, 1}, {1, 1}, {1}});
  const auto t2 = from_rows({{1, 0, 1, 0}, {0, 0, 0}, {0, 1}, {1}});
  const auto t3 = from_rows({{1, 1, 1, 0}, {1, 1, 0}, {1, 0}, {0}});
  CHECK(t1.is_valid_for(a));
  CHECK(t2.is_valid_for(a));
  CHECK(t3.is_valid_for(a));
  CHECK(t1.dimension() == 3);
  CHECK(t2.dimension() == 1);
  CHECK(t3.dimension() == 3);
  CHECK(TeslerTableau(4).dimension() == 0);
  CHECK_FALSE(TeslerTableau(4).is_valid_for(a));
}

TEST_CASE("tableau cell access") {
  TeslerTableau t(3);
  t.set(1, 3, true);
  t.set(3, 3, true);
  CHECK(t.get(1, 3));
  CHECK_FALSE(t.get(1, 2));
  CHECK(t.column_has_one_above(3));
  CHECK_FALSE(t.column_has_one_above(2));
  CHECK(t.ones() == 2);
  CHECK(t.nonzero_rows() == 2);
  CHECK(t.cells() == Cells{{1, 3}, {3, 3}});
  CHECK_THROWS_AS(t.set(2, 1, true), InvalidInput);
  CHECK_FALSE(t.get(0, 1));
}

TEST_CASE("enumeration matches brute-force fillings") {
  for (int n = 1; n <= 4; ++n) {
    for_each_vector(n, 2, [&](const Vec& a) {
      const auto brute = oracle::all_tesler_fillings(a);
      const auto faces = enumerate_tableaux(a);
      REQUIRE(faces.size() == brute.size());
      std::map<int, std::size_t> by_dim;
      for (const auto& f : brute) ++by_dim[f.dimension()];
      const auto fv = f_vector(a);
      for (const auto& [d, count] : by_dim) {
        REQUIRE(d < static_cast<int>(fv.size()));
        CHECK(fv[d] == count);
      }
      for (const auto& face : faces) {
        CHECK(face.tableau.is_valid_for(a));
        CHECK(face.dimension == face.tableau.dimension());
      }
      std::set<TeslerTableau> distinct;
      for (const auto& face : faces) distinct.insert(face.tableau);
      CHECK(distinct.size() == faces.size());
    });
  }
}

TEST_CASE("f-vector spot values") {
  CHECK(f_vector(Vec{1, 1})[0] == 2);
  CHECK(f_vector(Vec{1, 0, 1})[0] == 4);
  CHECK(f_vector(Vec{1, 1, 0})[0] == 6);
  CHECK(f_vector(Vec{0, 0, 0}) == std::vector<BigInt>{1});
  // F_{K_3}(1,1,-2) is a segment.
  CHECK(f_vector(Vec{1, 1}) == std::vector<BigInt>{2, 1});
  BigInt total = 0;
  for (const auto& x : f_vector(Vec{1, 1, 0, 0})) total += x;
  CHECK(total == enumerate_tableaux(Vec{1, 1, 0, 0}).size());
}

TEST_CASE("dimension is monotone under the entrywise order") {
  for (const Vec& a : {Vec{1, 0, 1}, Vec{1, 1, 0}, Vec{2, 0, 0, 1}, Vec{1, 1, 1}}) {
    const auto faces = enumerate_tableaux(a);
    for (const auto& s : faces) {
      for (const auto& t : faces) {
        if (s.tableau.leq(t.tableau)) CHECK(s.dimension <= t.dimension);
      }
    }
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_tableaux(Vec(8, 1)), LimitExceeded);
  CHECK_THROWS_AS(enumerate_tableaux(Vec{1, -1}), InvalidInput);
  CHECK(enumerate_tableaux(Vec(8, 0), 0, 8).size() == 1);
}

TEST_CASE("figure tableau maps to the figure forest") {
  const Cells ones{{1, 6}, {2, 2}, {3, 6}, {5, 10}, {6, 9}, {8, 9}, {9, 9}, {10, 10}};
  const auto t = TeslerTableau::from_cells(10, ones);
  Vec a(10, 0);
  for (int v : {1, 2, 3, 5, 8}) a[v - 1] = 1;
  REQUIRE(t.is_valid_for(a));
  CHECK(t.dimension() == 0);
  const auto forest = tableau_to_forest(t, a);
  auto roots = forest.roots();
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<int>{2, 9, 10});
  auto leaves = forest.leaves();
  std::sort(leaves.begin(), leaves.end());
  CHECK(leaves == std::vector<int>{1, 2, 3, 5, 8});
  CHECK(forest.parents() ==
        std::vector<int>{6, 0, 6, -1, 10, 9, -1, 9, 0, 0});
  CHECK(forest_to_tableau(forest) == t);
}

TEST_CASE("tableau-forest bijection") {
  for (int n = 1; n <= 6; ++n) {
    for_each_vector(n, n <= 4 ? 2 : 1, [&](const Vec& a) {
      const auto vertices = enumerate_tableaux(a, 0);
      const auto forests = enumerate_admissible_forests(a);
      CHECK(vertices.size() == forests.size());
      std::set<DecreasingForest> images;
      for (const auto& v : vertices) {
        const auto f = tableau_to_forest(v.tableau, a);
        CHECK(forest_is_admissible(f, a));
        CHECK(forest_to_tableau(f) == v.tableau);
        images.insert(f);
      }
      CHECK(images.size() == vertices.size());
      if (n <= 5) CHECK(forests.size() == oracle::count_leafy_forests(a));
    });
  }
  CHECK_THROWS_AS(tableau_to_forest(TeslerTableau::from_cells(2, Cells{{1, 1}, {1, 2}, {2, 2}}),
                                    Vec{1, 1}),
                  InvalidInput);
}

TEST_CASE("vertex counts") {
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; r + s <= 4; ++s) {
      Vec a(r + s + 2, 0);
      a[0] = 1;
      a[r + 1] = 1;
      CHECK(enumerate_tableaux(a, 0).size() == vertex_count_formula(r, s));
    }
  }
  CHECK(vertex_count_formula(0, 0) == 2);
  CHECK(vertex_count_formula(1, 1) == 12);
  for (int n = 2; n <= 7; ++n) {
    Vec a(n, 0);
    a[0] = a[1] = 1;
    CHECK(enumerate_tableaux(a, 0, 7).size() == catalan_polytope_vertices(n));
  }
  CHECK(catalan_polytope_vertices(4) == 18);
}

TEST_CASE("vertices match forest-supported lattice points") {
  for (int n = 1; n <= 4; ++n) {
    for_each_vector(n, 2, [&](const Vec& a) {
      Vec b(a);
      std::int64_t sum = 0;
      for (auto x : a) sum += x;
      b.push_back(-sum);
      const std::size_t tableaux = enumerate_tableaux(a, 0).size();
      CHECK(tableaux == oracle_vertices(a));
      CHECK(tableaux == count_vertices_by_acyclic_support(complete_graph(n + 1),
                                                          NetflowVector(b)));
    });
  }
}

TEST_CASE("f-vectors satisfy the Euler relation") {
  for (int n = 1; n <= 6; ++n) {
    for_each_vector(n, 1, [&](const Vec& a) {
      const auto f = f_vector(a);
      BigInt alternating = 0;
      for (std::size_t d = 0; d < f.size(); ++d) {
        alternating += (d % 2 == 0 ? 1 : -1) * f[d];
      }
      CHECK(alternating == 1);
    });
  }
  // The all-ones netflow has n! vertices.
  BigInt fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    CHECK(f_vector(Vec(n, 1))[0] == fact);
  }
}
