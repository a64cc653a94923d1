#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "flowcat/closedform.hpp"
#include "flowcat/errors.hpp"
#include "flowcat/gamma_half.hpp"

using namespace flowcat;

namespace {

// Floating-point versions of the product formulas, used as a sanity oracle.
double morris_float(int n, double a, double b, double m) {
  double acc = 1.0 / std::tgamma(n + 1.0);
  for (int j = 0; j < n; ++j) {
    acc *= std::tgamma(a + b + (n - 1 + j) * m / 2) * std::tgamma(m / 2);
    acc /= std::tgamma(b + j * m / 2) * std::tgamma(m / 2 + j * m / 2) *
           std::tgamma(a + j * m / 2 + 1);
  }
  return acc;
}

double thm2_float(int n, double a, double b, double m) {
  double acc = 1.0 / std::tgamma(n);
  for (int j = 0; j <= n - 2; ++j) {
    acc *= std::tgamma(a - 1 + b + (n - 2 + j) * m / 2) * std::tgamma(m / 2);
    acc /= std::tgamma(a + j * m / 2) * std::tgamma(b + j * m / 2) *
           std::tgamma(m / 2 + j * m / 2);
  }
  return acc;
}

double thm3_float(int n, double a, double b) {
  double acc = std::tgamma((b - 1) * n + a * n * (n - 1) / 2 + 1);
  for (int i = 0; i < n; ++i) {
    acc *= std::tgamma(1 + a / 2);
    acc /= std::tgamma(1 + (i + 1) * a / 2) * std::tgamma(b + i * a / 2);
  }
  return acc;
}

double as_double(const Rational& q) { return q.convert_to<double>(); }

void check_close(double got, double want) {
  CHECK(std::fabs(got - want) <= 1e-9 * std::fabs(want) + 1e-12);
}

}  // namespace

TEST_CASE("catalan numbers satisfy their recurrence") {
  std::vector<BigInt> c{1};
  for (int i = 1; i <= 25; ++i) {
    BigInt next = 0;
    for (int k = 0; k < i; ++k) next += c[k] * c[i - 1 - k];
    c.push_back(next);
  }
  for (int i = 0; i <= 25; ++i) CHECK(catalan(i) == c[i]);
  CHECK_THROWS_AS(catalan(-1), InvalidInput);
}

TEST_CASE("catalan products") {
  const std::vector<int> cry{1, 1, 2, 10, 140, 5880};
  for (int n = 2; n <= 7; ++n) CHECK(cry_product(n) == cry[n - 2]);
  const std::vector<int> thm1{1, 4, 64, 5120};
  for (int n = 2; n <= 5; ++n) CHECK(thm1_volume(n) == thm1[n - 2]);
  CHECK(thm1_volume(8) > BigInt(1000000000000LL));
  CHECK_THROWS_AS(cry_product(1), InvalidInput);
}

TEST_CASE("gamma at half integers") {
  CHECK(gamma_half(2) == GammaHalfValue(1, 0));
  CHECK(gamma_half(8) == GammaHalfValue(6, 0));
  CHECK(gamma_half(1) == GammaHalfValue(1, 1));
  CHECK(gamma_half(3) == GammaHalfValue(Rational(1, 2), 1));
  CHECK(gamma_half(7) == GammaHalfValue(Rational(15, 8), 1));
  CHECK_THROWS_AS(gamma_half(0), InvalidInput);
  CHECK_THROWS_AS(gamma_half(-3), InvalidInput);
  auto v = gamma_half(1) * gamma_half(1);
  CHECK(v.pi_half_power() == 2);
  CHECK_THROWS_AS(v.to_rational(), DefectDetected);
  v /= gamma_half(3) * gamma_half(5);
  CHECK(v.is_rational());
  CHECK(v.to_rational() == Rational(8, 3));
}

TEST_CASE("morris closed form against floating point") {
  for (int n = 0; n <= 4; ++n) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int m = 1; m <= 3; ++m) {
          check_close(as_double(morris_closed(n, a, b, m)),
                      morris_float(n, a, b, m));
        }
      }
    }
  }
  CHECK(morris_closed(1, 2, 3, 1) == 6);
  CHECK(morris_closed(2, 0, 2, 1) == 2);
  BigInt product = 1;
  for (int n = 1; n <= 6; ++n) {
    product *= catalan(n);
    CHECK(morris_closed(n, 0, 2, 1) == Rational(product));
  }
}

TEST_CASE("volume theorems are integers and match floating point") {
  for (int n = 2; n <= 5; ++n) {
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        for (int m = 1; m <= 3; ++m) {
          const Rational v = thm2_volume(n, a, b, m);
          BigInt z;
          CHECK(as_integer(v, z));
          CHECK(z > 0);
          check_close(as_double(v), thm2_float(n, a, b, m));
        }
        const Rational t = thm3_volume(n, a, b);
        BigInt z;
        CHECK(as_integer(t, z));
        check_close(as_double(t), thm3_float(n, a, b));
      }
    }
  }
  // Unit case of the second family is the Catalan product.
  for (int n = 2; n <= 7; ++n) {
    CHECK(thm2_volume(n, 1, 1, 1) == Rational(morris_closed(n - 1, 0, 1, 1)));
  }
}

TEST_CASE("tesler unit volume") {
  CHECK(tesler_unit_volume(2) == 1);
  CHECK(tesler_unit_volume(3) == 4);
  for (int n = 2; n <= 8; ++n) {
    CHECK(Rational(tesler_unit_volume(n)) == thm3_volume(n, 1, 1));
    BigInt catalans = 1;
    for (int i = 0; i < n; ++i) catalans *= catalan(i);
    CHECK(tesler_unit_volume(n) == syt_staircase(n) * catalans);
  }
}

TEST_CASE("staircase tableaux by hook lengths") {
  CHECK(syt_staircase(1) == 1);
  CHECK(syt_staircase(2) == 1);
  CHECK(syt_staircase(3) == 2);
  CHECK(syt_staircase(4) == 16);
  CHECK(syt_staircase(5) == 768);
}

TEST_CASE("closed form domains") {
  CHECK_THROWS_AS(thm3_volume(2, 0, 0), InvalidInput);
  CHECK_THROWS_AS(thm3_volume(1, 1, 1), InvalidInput);
  CHECK_THROWS_AS(thm2_volume(0, 1, 1, 1), InvalidInput);
  CHECK_THROWS_AS(morris_closed(-1, 1, 1, 1), InvalidInput);
}
