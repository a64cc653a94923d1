#ifndef FLOWCAT_CTENGINE_HPP
#define FLOWCAT_CTENGINE_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flowcat/numeric.hpp"

namespace flowcat {

struct Monomial {
  BigInt coefficient;
  std::vector<std::int64_t> exponents;
};

// numerator * prod x_i^{-x_pole[i]} (1 - x_i)^{-one_minus_pole[i]}
//           * prod_{i<j} (x_j - x_i)^{-vandermonde_power}
//
// 1/(x_j - x_i) for i < j is always read as x_j^{-1} sum_k (x_i/x_j)^k.
struct CTIntegrand {
  int n_vars = 0;
  std::vector<Monomial> numerator;
  std::vector<std::int64_t> x_pole;
  std::vector<std::int64_t> one_minus_pole;
  std::int64_t vandermonde_power = 0;

  // Throws InvalidInput on a structurally invalid integrand.
  void validate() const;
};

// CT_{x_n} ... CT_{x_1} of the integrand.
//
// (1 - x_i)^{-b_i} expands as a sum over nonnegative rows of length b_i
// (x_i to the row sum) and each (x_j - x_i)^{-1} power as a sum over umat
// matrices (x_k to the hook sum h_k), so the constant term counts tuples of
// such matrices whose exponents cancel the numerator monomial. The count is a
// row-by-row DP: processing row k fixes the total that must leave row k, and
// the state carries the column totals already placed below the diagonal of
// later rows. Entries of the m matrices at the same cell are aggregated with
// weight binom(c + m - 1, m - 1).
BigInt constant_term(const CTIntegrand& integrand);

// CT of (x_{n-1} + x_n)^{C(n,2)} / prod_{i<j}(x_j - x_i); n >= 2.
BigInt catalan_polytope_ct(int n);

// CT of prod x_i^{-a} (1 - x_i)^{-b} prod_{i<j} (x_j - x_i)^{-m}.
Rational morris_ct(int n, std::int64_t a, std::int64_t b, std::int64_t m);

// CT of (x_1 + ... + x_n)^{a C(n,2) + n(b-1)} prod x_i^{1-b}
//   prod_{i<j} (x_j - x_i)^{-a}; n >= 2.
BigInt tesler_ct(int n, std::int64_t a, std::int64_t b);

struct LemmaSides {
  BigInt lhs;
  BigInt rhs;
};

// Both sides of the two-variable reduction identity
//   CT (x_{n-1}+x_n)^{C(n,2)-a} (x_{n-1}^{a_{n-1}} x_n^{a_n}
//        + x_{n-1}^{a_n} x_n^{a_{n-1}}) prod_{i<=n-2} x_i^{a_i} / V_n
//   = 2^{C(n,2)-a} CT prod_{i<=n-2} x_i^{a_i} (1-x_i)^{-2} / V_{n-2}
// where a = sum a_i. Both sides are 0 when C(n,2) - a < 0.
LemmaSides lemma_gen_sides(int n, const std::vector<std::int64_t>& a_vec);

struct PhiReport {
  bool well_defined = true;  // image lies in Y x {0..R}, weights preserved
  bool injective = true;
  bool surjective = true;
  bool dichotomy = true;     // exactly one of the two inequalities per (B,t)
  std::size_t x_count = 0;
  std::size_t x_prime_count = 0;
  std::size_t y_count = 0;
  std::int64_t range = 0;    // R = C(n,2) - a; targets are Y x {0..R}

  bool ok() const { return well_defined && injective && surjective && dichotomy; }
};

// Enumerates X = union_t X_t and X' = union_t X'_t (umat n x n matrices with
// h_i = -a_i for i <= n-2 and h_{n-1} = -a_{n-1} - t, resp. -a_n - t) and
// Y (umat (n-2) x n with h_i = -a_i), applies
//   A in X_t  -> (top n-2 rows, t)
//   A in X'_t -> (top n-2 rows with the last two columns swapped, R - t)
// and checks that the map is a bijection onto Y x {0..R}.
PhiReport verify_phi_bijection(int n, const std::vector<std::int64_t>& a_vec);

// Truncated expansions of prod_i (1-x_i)^{-b} prod_{i<j} (x_j-x_i)^{-m},
// graded by the total expansion index w (sum of all geometric-series
// indices, equivalently the sum of the free matrix entries). Keys are
// (w, exponent vector); only w <= max_weight is kept.
using GradedSeries = std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, BigInt>;

// Multiplies the truncated geometric series factor by factor.
GradedSeries expand_by_series(int n, std::int64_t b, std::int64_t m,
                              std::int64_t max_weight);
// Sums x^{sum_l h(A^(l)) + r(B)} over A^(1..m) in umat(n,n), B in mat(n,b).
GradedSeries expand_by_matrices(int n, std::int64_t b, std::int64_t m,
                                std::int64_t max_weight);

}  // namespace flowcat

#endif
