#ifndef FLOWCAT_LIDSKII_HPP
#define FLOWCAT_LIDSKII_HPP

#include "flowcat/graph.hpp"
#include "flowcat/numeric.hpp"

namespace flowcat {

// Normalized volume of F_G(a') from the generalized Lidskii volume formula:
//
//   sum over weak compositions i of N-n into n parts of
//     multinomial(N-n; i) * prod a_k^{i_k} * K_{G'}(i_1 - t_1, ..., i_n - t_n)
//
// with G' the restriction of G to [n] and t_k = outdeg(k) - 1. Powers use
// 0^0 = 1, so when prune_zero_support is set the compositions that put mass
// on a zero netflow entry are never generated.
BigInt lidskii_volume(const Multigraph& graph, const NetflowVector& netflow,
                      bool prune_zero_support = true);

// Lattice points of F_G(a'), i.e. K_G(a'), from the binomial Lidskii formula
// (weights binom(a_k + t_k, i_k) instead of the multinomial).
BigInt lidskii_points(const Multigraph& graph, const NetflowVector& netflow);

// Volume of F_G(1, 0, ..., 0, -1) as K_G(0, d_2, ..., d_{v-1}, -sum d) with
// d_i = indeg(i) - 1.
BigInt ps_volume(const Multigraph& graph);

}  // namespace flowcat

#endif
