#include "flowcat/numeric.hpp"

#include <cstdlib>
#include <string>

#include "flowcat/errors.hpp"

namespace flowcat {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt binomial_any(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n >= 0) return binomial(n, k);
  // binom(-m, k) = (-1)^k binom(m + k - 1, k)
  BigInt value = binomial(-n + k - 1, k);
  return (k % 2 == 0) ? value : BigInt(-value);
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw InvalidInput("factorial of a negative integer");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt multinomial(const std::vector<std::int64_t>& parts) {
  BigInt result = 1;
  std::int64_t running = 0;
  for (std::int64_t p : parts) {
    if (p < 0) throw InvalidInput("multinomial part must be nonnegative");
    running += p;
    result *= binomial(running, p);
  }
  return result;
}

BigInt pow_int(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string to_decimal(const Rational& value) {
  BigInt whole;
  if (as_integer(value, whole)) return whole.str();
  return value.str();
}

bool as_integer(const Rational& value, BigInt& out) {
  if (boost::multiprecision::denominator(value) != 1) return false;
  out = boost::multiprecision::numerator(value);
  return true;
}

std::size_t enumeration_cap() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("FLOWCAT_MAX_CELLS");
    if (env == nullptr || *env == '\0') return std::size_t{5'000'000};
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      return std::size_t{5'000'000};
    }
  }();
  return cap;
}

}  // namespace flowcat
