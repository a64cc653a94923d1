#ifndef FLOWCAT_GAMMA_HALF_HPP
#define FLOWCAT_GAMMA_HALF_HPP

#include <cstdint>
#include <string>

#include "flowcat/numeric.hpp"

namespace flowcat {

// Exact value q * pi^{e/2}. Gamma at positive integers and half-integers is
// always of this form, and products/quotients stay in it.
class GammaHalfValue {
 public:
  GammaHalfValue() = default;
  GammaHalfValue(Rational q, std::int64_t pi_half_power)
      : q_(std::move(q)), e_(pi_half_power) {}

  const Rational& rational_part() const { return q_; }
  std::int64_t pi_half_power() const { return e_; }
  bool is_rational() const { return e_ == 0; }

  // Throws DefectDetected when a power of sqrt(pi) remains.
  Rational to_rational() const;

  GammaHalfValue& operator*=(const GammaHalfValue& rhs);
  GammaHalfValue& operator/=(const GammaHalfValue& rhs);
  friend GammaHalfValue operator*(GammaHalfValue lhs, const GammaHalfValue& rhs) {
    return lhs *= rhs;
  }
  friend GammaHalfValue operator/(GammaHalfValue lhs, const GammaHalfValue& rhs) {
    return lhs /= rhs;
  }
  friend bool operator==(const GammaHalfValue&, const GammaHalfValue&) = default;

  std::string str() const;

 private:
  Rational q_{1};
  std::int64_t e_ = 0;
};

// Gamma(two_j / 2) for two_j >= 1. Throws InvalidInput when two_j <= 0.
GammaHalfValue gamma_half(std::int64_t two_j);

}  // namespace flowcat

#endif
