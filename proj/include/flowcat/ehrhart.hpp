#ifndef FLOWCAT_EHRHART_HPP
#define FLOWCAT_EHRHART_HPP

#include <cstdint>
#include <vector>

#include "flowcat/graph.hpp"
#include "flowcat/numeric.hpp"

namespace flowcat {

// Polynomial with rational coefficients, constant term first.
struct EhrhartPolynomial {
  std::vector<Rational> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rational evaluate(std::int64_t t) const;
  // degree! * leading coefficient.
  BigInt normalized_volume() const;
};

// True when F_G(a') contains a flow that is strictly positive on every edge.
// Uses the uncapacitated transshipment criterion: with lower bound 1 on every
// edge and netflow T*a', a feasible flow exists for large T iff every
// out-closed vertex set U either has sum_U a' < 0 or receives no edge from
// outside (and then sum_U a' == 0).
bool has_strictly_positive_flow(const Multigraph& graph,
                                const NetflowVector& netflow);

bool is_connected(const Multigraph& graph);

// Interpolates p(t) = K_G(t * a') at t = 0..d, d = N - n, and checks the
// interpolant at t = d+1 and d+2. Throws DefectDetected when the polytope is
// not full dimensional or a check sample disagrees.
EhrhartPolynomial ehrhart_polynomial(const Multigraph& graph,
                                     const NetflowVector& netflow);

}  // namespace flowcat

#endif
