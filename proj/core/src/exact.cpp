#include "vecfield/exact.hpp"

#include "vecfield/errors.hpp"

#include <cmath>

namespace vfc {

ExactCount exact_div(const ExactCount& numerator, const ExactCount& denominator,
                     const char* context) {
  ExactCount quotient;
  ExactCount remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw NotDivisible(std::string(context) + ": " + numerator.str() + " is not divisible by " +
                       denominator.str());
  }
  return quotient;
}

ExactCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactCount result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is binom(n - k + i, i) here
  }
  return result;
}

double log_of(const ExactCount& value) {
  // Keep the top ~60 bits and account for the rest as a power of two.
  const auto bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 60) return std::log(value.convert_to<double>());
  const auto shift = bits - 60;
  const ExactCount top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace vfc
