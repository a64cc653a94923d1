#ifndef FLOWCAT_CLOSEDFORM_HPP
#define FLOWCAT_CLOSEDFORM_HPP

#include <cstdint>

#include "flowcat/gamma_half.hpp"
#include "flowcat/numeric.hpp"

namespace flowcat {

BigInt catalan(std::int64_t i);

// prod_{k=1}^{n-2} Cat(k); n >= 2.
BigInt cry_product(int n);

// 2^{C(n,2)-1} prod_{i=1}^{n-2} Cat(i); n >= 2.
BigInt thm1_volume(int n);

// Right-hand side of the Morris constant term identity
//   1/n! prod_{j=0}^{n-1} Gamma(a+b+(n-1+j)m/2) Gamma(m/2)
//        / (Gamma(b+jm/2) Gamma(m/2+jm/2) Gamma(a+jm/2+1)).
// Throws InvalidInput on a nonpositive Gamma argument and DefectDetected if
// a power of pi survives.
Rational morris_closed(int n, std::int64_t a, std::int64_t b, std::int64_t m);

// Volume of the multigraph family with (1,i) x a, (i,n+1) x b, (i,j) x m:
//   1/(n-1)! prod_{j=0}^{n-2} Gamma(a-1+b+(n-2+j)m/2) Gamma(m/2)
//        / (Gamma(a+jm/2) Gamma(b+jm/2) Gamma(m/2+jm/2)).
Rational thm2_volume(int n, std::int64_t a, std::int64_t b, std::int64_t m);

// ((b-1)n + a C(n,2))! prod_{i=0}^{n-1} Gamma(1+a/2)
//        / (Gamma(1+(i+1)a/2) Gamma(b+ia/2)).
Rational thm3_volume(int n, std::int64_t a, std::int64_t b);

// C(n,2)! 2^{C(n,2)} / prod_{i=1}^n i!
BigInt tesler_unit_volume(int n);

// Standard Young tableaux of staircase shape (n-1, ..., 1), hook length
// formula.
BigInt syt_staircase(int n);

}  // namespace flowcat

#endif
