#include "flowcat/lidskii.hpp"

#include <numeric>

#include "flowcat/compositions.hpp"
#include "flowcat/errors.hpp"
#include "flowcat/kostant.hpp"

namespace flowcat {

namespace {

void check_inputs(const Multigraph& graph, const NetflowVector& netflow) {
  if (netflow.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw InvalidInput("netflow length " + std::to_string(netflow.size()) +
                       " does not match vertex count " +
                       std::to_string(graph.vertex_count()));
  }
  if (!netflow.is_source_nonnegative()) {
    throw InvalidInput("netflow entries before the sink must be >= 0");
  }
  const std::int64_t n = graph.vertex_count() - 1;
  if (graph.edge_count() < n) {
    throw InvalidInput("graph has fewer than n edges; Lidskii needs N >= n");
  }
}

// Shared sum; `weight` gives the coefficient of a composition.
template <class Weight>
BigInt lidskii_sum(const Multigraph& graph, std::vector<bool> mask,
                   Weight&& weight) {
  const int n = graph.vertex_count() - 1;
  if (n == 0) return 1;
  const std::int64_t excess = graph.edge_count() - n;
  const Multigraph restricted = graph.restricted_to_prefix(n);
  const auto offsets = degree_offsets(graph).out_offsets;

  BigInt total = 0;
  std::vector<std::int64_t> arg(n);
  for_each_composition(excess, n, std::move(mask), [&](const auto& parts) {
    BigInt w = weight(parts);
    if (w == 0) return;
    for (int k = 0; k < n; ++k) arg[k] = parts[k] - offsets[k];
    // The prefix sum of arg is already zero (every edge leaves [n]).
    BigInt count = kostant(restricted, arg);
    if (count != 0) total += w * count;
  });
  return total;
}

}  // namespace

BigInt lidskii_volume(const Multigraph& graph, const NetflowVector& netflow,
                      bool prune_zero_support) {
  check_inputs(graph, netflow);
  const auto a = netflow.prefix();
  std::vector<bool> mask(a.size(), true);
  if (prune_zero_support) {
    for (std::size_t k = 0; k < a.size(); ++k) mask[k] = a[k] != 0;
  }
  return lidskii_sum(graph, mask, [&](const auto& parts) {
    BigInt w = multinomial(parts);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      w *= pow_int(BigInt(a[k]), static_cast<std::uint64_t>(parts[k]));
    }
    return w;
  });
}

BigInt lidskii_points(const Multigraph& graph, const NetflowVector& netflow) {
  check_inputs(graph, netflow);
  const auto a = netflow.prefix();
  const auto offsets = degree_offsets(graph).out_offsets;
  return lidskii_sum(graph, {}, [&](const auto& parts) {
    BigInt w = 1;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      w *= binomial_any(a[k] + offsets[k], parts[k]);
      if (w == 0) break;
    }
    return w;
  });
}

BigInt ps_volume(const Multigraph& graph) {
  const int v = graph.vertex_count();
  if (v < 2) throw InvalidInput("ps_volume needs at least two vertices");
  const auto d = degree_offsets(graph).in_offsets;
  std::vector<std::int64_t> arg(v, 0);
  std::int64_t sum = 0;
  for (int i = 1; i + 1 < v; ++i) {
    arg[i] = d[i];
    sum += d[i];
  }
  arg[v - 1] = -sum;
  return kostant(graph, arg);
}

}  // namespace flowcat
