#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vfc {

/// Arbitrary-precision count. Non-negative wherever it denotes a cardinality;
/// the same type carries the signed intermediates (a_n and friends).
using ExactCount = boost::multiprecision::cpp_int;

/// Quotient of an exact division. Throws NotDivisible on a nonzero remainder.
ExactCount exact_div(const ExactCount& numerator, const ExactCount& denominator,
                     const char* context);

ExactCount binomial(unsigned n, unsigned k);

/// Natural logarithm of a positive big integer, accurate to double precision.
double log_of(const ExactCount& value);

inline std::string to_string(const ExactCount& value) { return value.str(); }

}  // namespace vfc
