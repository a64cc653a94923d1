#include "flowcat/gamma_half.hpp"

#include "flowcat/errors.hpp"

namespace flowcat {

Rational GammaHalfValue::to_rational() const {
  if (e_ != 0) {
    throw DefectDetected("value " + str() + " is not rational");
  }
  return q_;
}

GammaHalfValue& GammaHalfValue::operator*=(const GammaHalfValue& rhs) {
  q_ *= rhs.q_;
  e_ += rhs.e_;
  return *this;
}

GammaHalfValue& GammaHalfValue::operator/=(const GammaHalfValue& rhs) {
  if (rhs.q_ == 0) throw InvalidInput("division by a zero Gamma value");
  q_ /= rhs.q_;
  e_ -= rhs.e_;
  return *this;
}

std::string GammaHalfValue::str() const {
  if (e_ == 0) return to_decimal(q_);
  return to_decimal(q_) + "*pi^(" + std::to_string(e_) + "/2)";
}

GammaHalfValue gamma_half(std::int64_t two_j) {
  if (two_j <= 0) {
    throw InvalidInput("Gamma argument " + std::to_string(two_j) +
                       "/2 is not positive");
  }
  if (two_j % 2 == 0) {
    return {Rational(factorial(two_j / 2 - 1)), 0};
  }
  // Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)
  const std::int64_t k = (two_j - 1) / 2;
  Rational q(factorial(2 * k),
             pow_int(BigInt(4), static_cast<std::uint64_t>(k)) * factorial(k));
  return {q, 1};
}

}  // namespace flowcat
