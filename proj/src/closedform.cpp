#include "flowcat/closedform.hpp"

#include <vector>

#include "flowcat/errors.hpp"

namespace flowcat {

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

BigInt catalan(std::int64_t i) {
  if (i < 0) throw InvalidInput("catalan index must be >= 0");
  return binomial(2 * i, i) / (i + 1);
}

BigInt cry_product(int n) {
  if (n < 2) throw InvalidInput("cry_product needs n >= 2");
  BigInt p = 1;
  for (int k = 1; k <= n - 2; ++k) p *= catalan(k);
  return p;
}

BigInt thm1_volume(int n) {
  if (n < 2) throw InvalidInput("thm1_volume needs n >= 2");
  return pow_int(BigInt(2), static_cast<std::uint64_t>(choose2(n) - 1)) *
         cry_product(n);
}

Rational morris_closed(int n, std::int64_t a, std::int64_t b, std::int64_t m) {
  if (n < 0) throw InvalidInput("morris_closed needs n >= 0");
  GammaHalfValue acc(Rational(1) / Rational(factorial(n)), 0);
  for (std::int64_t j = 0; j < n; ++j) {
    acc *= gamma_half(2 * (a + b) + (n - 1 + j) * m);
    acc *= gamma_half(m);
    acc /= gamma_half(2 * b + j * m);
    acc /= gamma_half(m + j * m);
    acc /= gamma_half(2 * a + j * m + 2);
  }
  return acc.to_rational();
}

Rational thm2_volume(int n, std::int64_t a, std::int64_t b, std::int64_t m) {
  if (n < 1) throw InvalidInput("thm2_volume needs n >= 1");
  GammaHalfValue acc(Rational(1) / Rational(factorial(n - 1)), 0);
  for (std::int64_t j = 0; j <= n - 2; ++j) {
    acc *= gamma_half(2 * (a - 1 + b) + (n - 2 + j) * m);
    acc *= gamma_half(m);
    acc /= gamma_half(2 * a + j * m);
    acc /= gamma_half(2 * b + j * m);
    acc /= gamma_half(m + j * m);
  }
  return acc.to_rational();
}

Rational thm3_volume(int n, std::int64_t a, std::int64_t b) {
  if (n < 2) throw InvalidInput("thm3_volume needs n >= 2");
  if (a < 0 || b < 0) throw InvalidInput("thm3_volume needs a, b >= 0");
  const std::int64_t top = (b - 1) * n + a * choose2(n);
  if (top < 0) {
    throw InvalidInput("thm3_volume: (b-1)n + a C(n,2) is negative");
  }
  GammaHalfValue acc(Rational(factorial(top)), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    acc *= gamma_half(2 + a);
    acc /= gamma_half(2 + (i + 1) * a);
    acc /= gamma_half(2 * b + i * a);
  }
  return acc.to_rational();
}

BigInt tesler_unit_volume(int n) {
  if (n < 2) throw InvalidInput("tesler_unit_volume needs n >= 2");
  const std::int64_t c = choose2(n);
  BigInt denom = 1;
  for (int i = 1; i <= n; ++i) denom *= factorial(i);
  return factorial(c) * pow_int(BigInt(2), static_cast<std::uint64_t>(c)) /
         denom;
}

BigInt syt_staircase(int n) {
  if (n < 1) throw InvalidInput("syt_staircase needs n >= 1");
  std::vector<int> shape;
  for (int len = n - 1; len >= 1; --len) shape.push_back(len);
  BigInt hooks = 1;
  std::int64_t cells = 0;
  for (std::size_t row = 0; row < shape.size(); ++row) {
    for (int col = 0; col < shape[row]; ++col) {
      const int arm = shape[row] - col - 1;
      int leg = 0;
      for (std::size_t below = row + 1; below < shape.size(); ++below) {
        if (shape[below] > col) ++leg;
      }
      hooks *= arm + leg + 1;
      ++cells;
    }
  }
  return factorial(cells) / hooks;
}

}  // namespace flowcat
