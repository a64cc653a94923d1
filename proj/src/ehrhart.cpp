#include "flowcat/ehrhart.hpp"

#include <numeric>

#include "flowcat/errors.hpp"
#include "flowcat/kostant.hpp"

namespace flowcat {

Rational EhrhartPolynomial::evaluate(std::int64_t t) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

BigInt EhrhartPolynomial::normalized_volume() const {
  if (coefficients.empty()) return 0;
  Rational v = coefficients.back() * Rational(factorial(degree()));
  BigInt out;
  if (!as_integer(v, out)) {
    throw DefectDetected("normalized volume is not an integer: " +
                         to_decimal(v));
  }
  return out;
}

bool is_connected(const Multigraph& graph) {
  const int v = graph.vertex_count();
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = v;
  for (const Edge& e : graph.edges()) {
    const int r1 = find(e.source - 1);
    const int r2 = find(e.target - 1);
    if (r1 != r2) {
      parent[r1] = r2;
      --components;
    }
  }
  return components == 1;
}

bool has_strictly_positive_flow(const Multigraph& graph,
                                const NetflowVector& netflow) {
  const int v = graph.vertex_count();
  if (v > 24) throw LimitExceeded("positivity check supports <= 24 vertices");
  const auto& a = netflow.entries();
  std::vector<std::uint32_t> succ(v, 0), pred(v, 0);
  for (const Edge& e : graph.edges()) {
    succ[e.source - 1] |= 1U << (e.target - 1);
    pred[e.target - 1] |= 1U << (e.source - 1);
  }
  const std::uint32_t full = (v == 32) ? ~0U : ((1U << v) - 1U);
  for (std::uint32_t u = 1; u < full; ++u) {
    bool closed = true;
    bool entered = false;
    std::int64_t supply = 0;
    for (int i = 0; i < v; ++i) {
      if (!(u >> i & 1U)) continue;
      if (succ[i] & ~u) {
        closed = false;
        break;
      }
      if (pred[i] & ~u) entered = true;
      supply += a[i];
    }
    if (!closed) continue;
    if (entered ? supply >= 0 : supply != 0) return false;
  }
  return true;
}

EhrhartPolynomial ehrhart_polynomial(const Multigraph& graph,
                                     const NetflowVector& netflow) {
  if (netflow.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw InvalidInput("netflow length does not match vertex count");
  }
  if (!netflow.is_source_nonnegative()) {
    throw InvalidInput("netflow entries before the sink must be >= 0");
  }
  const std::int64_t degree = graph.edge_count() - (graph.vertex_count() - 1);
  if (degree < 0 || !is_connected(graph) ||
      !has_strictly_positive_flow(graph, netflow)) {
    throw DefectDetected(
        "flow polytope is not full dimensional (need a connected graph and a "
        "strictly positive flow)");
  }

  auto sample = [&](std::int64_t t) {
    std::vector<std::int64_t> scaled(netflow.entries());
    for (auto& x : scaled) x *= t;
    return kostant(graph, scaled);
  };

  // Newton forward differences at 0..d.
  std::vector<BigInt> diffs;
  for (std::int64_t t = 0; t <= degree; ++t) diffs.push_back(sample(t));
  for (std::int64_t k = 1; k <= degree; ++k) {
    for (std::int64_t j = degree; j >= k; --j) diffs[j] -= diffs[j - 1];
  }

  // p(t) = sum_k diffs[k] * binom(t, k); expand binom(t, k) in powers of t.
  EhrhartPolynomial poly;
  poly.coefficients.assign(degree + 1, Rational(0));
  std::vector<Rational> falling{Rational(1)};  // t(t-1)...(t-k+1)
  for (std::int64_t k = 0; k <= degree; ++k) {
    if (k > 0) {
      std::vector<Rational> next(falling.size() + 1, Rational(0));
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * (k - 1);
      }
      falling = std::move(next);
    }
    const Rational scale = Rational(diffs[k]) / Rational(factorial(k));
    for (std::size_t i = 0; i < falling.size(); ++i) {
      poly.coefficients[i] += falling[i] * scale;
    }
  }

  if (poly.coefficients.back() == 0) {
    throw DefectDetected("interpolated polynomial has degree below N - n");
  }
  for (std::int64_t t = degree + 1; t <= degree + 2; ++t) {
    if (poly.evaluate(t) != Rational(sample(t))) {
      throw DefectDetected("Ehrhart interpolant disagrees with the lattice "
                           "point count at t = " + std::to_string(t));
    }
  }
  return poly;
}

}  // namespace flowcat
