#ifndef FLOWCAT_NUMERIC_HPP
#define FLOWCAT_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace flowcat {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Exact combinatorial helpers. All of them are defined for the full integer
// range that the callers need; out-of-range arguments give 0, not an error.

// binom(n, k) for n >= 0; 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.
BigInt binomial_any(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

// (sum parts)! / prod(parts!) ; requires all parts >= 0.
BigInt multinomial(const std::vector<std::int64_t>& parts);

BigInt pow_int(const BigInt& base, std::uint64_t exponent);

inline std::string to_decimal(const BigInt& value) { return value.str(); }
std::string to_decimal(const Rational& value);

// Returns true and writes the integer when the rational has denominator 1.
bool as_integer(const Rational& value, BigInt& out);

}  // namespace flowcat

#endif
