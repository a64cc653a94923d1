#ifndef FLOWCAT_KOSTANT_HPP
#define FLOWCAT_KOSTANT_HPP

#include <cstdint>
#include <span>

#include "flowcat/graph.hpp"
#include "flowcat/numeric.hpp"

namespace flowcat {

// Number of ways to write b as a nonnegative integer combination of the roots
// e_i - e_j, one root per edge slot (an edge of multiplicity m is m slots).
//
// Vertices are swept in increasing order. The sweep state is the vector of
// flow already delivered to the not-yet-processed vertices; at vertex i the
// available supply b_i + inflow is split over the out-edges one edge at a
// time, an edge of multiplicity m carrying c units in binom(c+m-1, m-1) ways.
// Returns 0 when sum(b) != 0. Throws InvalidInput on a length mismatch.
BigInt kostant(const Multigraph& graph, std::span<const std::int64_t> b);

}  // namespace flowcat

#endif
