#include "flowcat/faces.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "flowcat/errors.hpp"

namespace flowcat {

namespace {

void check_prefix(std::span<const std::int64_t> a) {
  if (a.size() > static_cast<std::size_t>(TeslerTableau::max_size)) {
    throw LimitExceeded("netflow prefix too long for tableau enumeration");
  }
  for (std::int64_t x : a) {
    if (x < 0) throw InvalidInput("netflow prefix entries must be >= 0");
  }
}

// Column mask for columns j..n (bits j-1..n-1).
std::uint32_t columns_from(int j, int n) {
  const std::uint32_t upto = n >= 32 ? ~0U : ((1U << n) - 1U);
  return upto & ~((1U << (j - 1)) - 1U);
}

}  // namespace

void for_each_tableau(std::span<const std::int64_t> a,
                      std::optional<int> max_dimension,
                      const std::function<void(const TeslerTableau&, int)>& visit) {
  check_prefix(a);
  const int n = static_cast<int>(a.size());
  TeslerTableau t(n);
  // `above` holds columns that received a 1 strictly above their diagonal.
  std::function<void(int, std::uint32_t, int)> rec = [&](int row,
                                                         std::uint32_t above,
                                                         int dim) {
    if (row > n) {
      visit(t, dim);
      return;
    }
    const bool forced = a[row - 1] > 0 || ((above >> (row - 1)) & 1U);
    if (!forced) {
      rec(row + 1, above, dim);
      return;
    }
    const std::uint32_t allowed = columns_from(row, n);
    const std::uint32_t diag = 1U << (row - 1);
    // Enumerate nonempty submasks of `allowed`.
    for (std::uint32_t s = allowed; s != 0; s = (s - 1) & allowed) {
      const int extra = std::popcount(s) - 1;
      if (max_dimension && dim + extra > *max_dimension) continue;
      for (int j = row; j <= n; ++j) t.set(row, j, (s >> (j - 1)) & 1U);
      rec(row + 1, above | (s & ~diag), dim + extra);
    }
    for (int j = row; j <= n; ++j) t.set(row, j, false);
  };
  rec(1, 0, 0);
}

std::vector<TableauFace> enumerate_tableaux(std::span<const std::int64_t> a,
                                            std::optional<int> max_dimension,
                                            int max_n) {
  if (static_cast<int>(a.size()) > max_n) {
    throw LimitExceeded("tableau enumeration bound exceeded: n = " +
                        std::to_string(a.size()) + " > " +
                        std::to_string(max_n));
  }
  const std::size_t cap = enumeration_cap();
  std::vector<TableauFace> out;
  for_each_tableau(a, max_dimension, [&](const TeslerTableau& t, int dim) {
    if (out.size() >= cap) {
      throw LimitExceeded("tableau enumeration exceeded the cell cap");
    }
    out.push_back({t, dim});
  });
  return out;
}

std::vector<BigInt> f_vector(std::span<const std::int64_t> a) {
  check_prefix(a);
  const int n = static_cast<int>(a.size());
  if (n > 16) throw LimitExceeded("f_vector supports n <= 16");
  // state: columns holding a 1 above the diagonal -> counts by dimension
  std::map<std::uint32_t, std::vector<BigInt>> states;
  states[0] = {BigInt(1)};
  for (int row = 1; row <= n; ++row) {
    std::map<std::uint32_t, std::vector<BigInt>> next;
    const std::uint32_t allowed = columns_from(row, n);
    const std::uint32_t diag = 1U << (row - 1);
    for (const auto& [above, counts] : states) {
      const bool forced = a[row - 1] > 0 || ((above >> (row - 1)) & 1U);
      const std::uint32_t carry = above & ~diag;
      if (!forced) {
        auto& dst = next[carry];
        if (dst.size() < counts.size()) dst.resize(counts.size());
        for (std::size_t d = 0; d < counts.size(); ++d) dst[d] += counts[d];
        continue;
      }
      for (std::uint32_t s = allowed; s != 0; s = (s - 1) & allowed) {
        const int extra = std::popcount(s) - 1;
        auto& dst = next[carry | (s & ~diag)];
        if (dst.size() < counts.size() + extra) {
          dst.resize(counts.size() + extra);
        }
        for (std::size_t d = 0; d < counts.size(); ++d) {
          dst[d + extra] += counts[d];
        }
      }
    }
    states = std::move(next);
  }
  std::vector<BigInt> total;
  for (const auto& [mask, counts] : states) {
    if (total.size() < counts.size()) total.resize(counts.size());
    for (std::size_t d = 0; d < counts.size(); ++d) total[d] += counts[d];
  }
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return total;
}

DecreasingForest::DecreasingForest(std::vector<int> parent)
    : parent_(std::move(parent)) {
  const int n = size();
  for (int v = 1; v <= n; ++v) {
    const int p = parent_[v - 1];
    if (p == absent || p == root) continue;
    if (p <= v || p > n) {
      throw InvalidInput("parent of " + std::to_string(v) +
                         " must be a larger label in 1.." + std::to_string(n));
    }
    if (parent_[p - 1] == absent) {
      throw InvalidInput("parent " + std::to_string(p) +
                         " is not in the vertex set");
    }
  }
}

std::vector<int> DecreasingForest::vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= size(); ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> DecreasingForest::roots() const {
  std::vector<int> out;
  for (int v = 1; v <= size(); ++v) {
    if (parent_[v - 1] == root) out.push_back(v);
  }
  return out;
}

std::vector<int> DecreasingForest::leaves() const {
  std::vector<bool> has_child(size() + 1, false);
  for (int v = 1; v <= size(); ++v) {
    if (parent_[v - 1] > 0) has_child[parent_[v - 1]] = true;
  }
  std::vector<int> out;
  for (int v = 1; v <= size(); ++v) {
    if (contains(v) && !has_child[v]) out.push_back(v);
  }
  return out;
}

bool forest_is_admissible(const DecreasingForest& forest,
                          std::span<const std::int64_t> a) {
  if (a.size() != static_cast<std::size_t>(forest.size())) return false;
  for (int v = 1; v <= forest.size(); ++v) {
    if (a[v - 1] > 0 && !forest.contains(v)) return false;
  }
  for (int leaf : forest.leaves()) {
    if (a[leaf - 1] == 0) return false;
  }
  return true;
}

DecreasingForest tableau_to_forest(const TeslerTableau& tableau,
                                   std::span<const std::int64_t> a) {
  if (!tableau.is_valid_for(a)) {
    throw InvalidInput("tableau is not a-valid");
  }
  if (tableau.dimension() != 0) {
    throw InvalidInput("tableau has dimension " +
                       std::to_string(tableau.dimension()) + ", expected 0");
  }
  const int n = tableau.size();
  std::vector<int> parent(n, DecreasingForest::absent);
  for (int i = 1; i <= n; ++i) {
    const std::uint32_t row = tableau.row_mask(i);
    if (row == 0) continue;
    const int j = std::countr_zero(row) + 1;
    parent[i - 1] = (j == i) ? DecreasingForest::root : j;
  }
  return DecreasingForest(std::move(parent));
}

TeslerTableau forest_to_tableau(const DecreasingForest& forest) {
  TeslerTableau t(forest.size());
  for (int v = 1; v <= forest.size(); ++v) {
    const int p = forest.parent(v);
    if (p == DecreasingForest::absent) continue;
    t.set(v, p == DecreasingForest::root ? v : p, true);
  }
  return t;
}

std::vector<DecreasingForest> enumerate_admissible_forests(
    std::span<const std::int64_t> a) {
  check_prefix(a);
  const int n = static_cast<int>(a.size());
  std::vector<DecreasingForest> out;
  std::vector<int> parent(n, DecreasingForest::absent);
  const std::size_t cap = enumeration_cap();
  std::function<void(int)> rec = [&](int v) {
    if (v == 0) {
      DecreasingForest f(parent);
      if (forest_is_admissible(f, a)) {
        if (out.size() >= cap) {
          throw LimitExceeded("forest enumeration exceeded the cell cap");
        }
        out.push_back(std::move(f));
      }
      return;
    }
    parent[v - 1] = DecreasingForest::absent;
    rec(v - 1);
    parent[v - 1] = DecreasingForest::root;
    rec(v - 1);
    for (int p = v + 1; p <= n; ++p) {
      if (parent[p - 1] == DecreasingForest::absent) continue;
      parent[v - 1] = p;
      rec(v - 1);
    }
    parent[v - 1] = DecreasingForest::absent;
  };
  rec(n);
  return out;
}

std::size_t count_vertices_by_acyclic_support(const Multigraph& graph,
                                              const NetflowVector& netflow) {
  const auto& edges = graph.edges();
  const int v = graph.vertex_count();
  if (netflow.size() != static_cast<std::size_t>(v)) {
    throw InvalidInput("netflow length does not match vertex count");
  }
  for (const Edge& e : edges) {
    if (e.multiplicity != 1) {
      throw InvalidInput("acyclic-support enumeration needs a simple graph");
    }
  }
  if (edges.size() > 24) {
    throw LimitExceeded("acyclic-support enumeration supports <= 24 edges");
  }
  const std::size_t m = edges.size();
  std::set<std::vector<std::int64_t>> found;
  for (std::uint32_t subset = 0; subset < (1U << m); ++subset) {
    // Union-find rejects supports with an undirected cycle.
    std::vector<int> comp(v);
    for (int i = 0; i < v; ++i) comp[i] = i;
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    bool acyclic = true;
    for (std::size_t k = 0; k < m && acyclic; ++k) {
      if (!((subset >> k) & 1U)) continue;
      const int r1 = find(edges[k].source - 1);
      const int r2 = find(edges[k].target - 1);
      if (r1 == r2) acyclic = false;
      comp[r1] = r2;
    }
    if (!acyclic) continue;

    // Peel leaves: a vertex with one unresolved edge fixes that edge's flow.
    std::vector<std::int64_t> residual(netflow.entries());
    std::vector<std::int64_t> flow(m, 0);
    std::vector<bool> open(m, false);
    std::vector<int> degree(v, 0);
    for (std::size_t k = 0; k < m; ++k) {
      if ((subset >> k) & 1U) {
        open[k] = true;
        ++degree[edges[k].source - 1];
        ++degree[edges[k].target - 1];
      }
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (int x = 0; x < v; ++x) {
        if (degree[x] != 1) continue;
        std::size_t k = 0;
        while (!(open[k] && (edges[k].source - 1 == x ||
                             edges[k].target - 1 == x))) {
          ++k;
        }
        const int s = edges[k].source - 1;
        const int t = edges[k].target - 1;
        // residual = required outflow minus assigned outflow plus inflow
        flow[k] = (s == x) ? residual[x] : -residual[x];
        residual[s] -= flow[k];
        residual[t] += flow[k];
        open[k] = false;
        --degree[s];
        --degree[t];
        progress = true;
      }
    }
    bool feasible = true;
    for (int x = 0; x < v && feasible; ++x) feasible = residual[x] == 0;
    for (std::size_t k = 0; k < m && feasible; ++k) feasible = flow[k] >= 0;
    if (feasible) found.insert(flow);
  }
  return found.size();
}

BigInt vertex_count_formula(std::int64_t r, std::int64_t s) {
  if (r < 0 || s < 0) throw InvalidInput("r and s must be >= 0");
  return pow_int(BigInt(2), static_cast<std::uint64_t>(r + 1)) *
         pow_int(BigInt(3), static_cast<std::uint64_t>(s));
}

BigInt catalan_polytope_vertices(int n) {
  if (n < 2) throw InvalidInput("catalan_polytope_vertices needs n >= 2");
  return 2 * pow_int(BigInt(3), static_cast<std::uint64_t>(n - 2));
}

}  // namespace flowcat
