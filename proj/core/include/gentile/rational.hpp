#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gentile {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// k! as an exact integer.
BigInt factorial(unsigned k);

// base^k over exact rationals. Throws std::overflow_error when the result
// would be astronomically large (|base| not in {0, 1} and k beyond 10^6).
Rational rational_pow(const Rational& base, unsigned long long k);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

}  // namespace gentile
