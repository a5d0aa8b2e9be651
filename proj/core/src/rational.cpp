#include "gentile/rational.hpp"

#include <stdexcept>

namespace gentile {

BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned j = 2; j <= k; ++j) out *= j;
  return out;
}

Rational rational_pow(const Rational& base, unsigned long long k) {
  if (k == 0) return Rational(1);
  if (base == 0) return Rational(0);
  if (base == 1) return Rational(1);
  if (base == -1) return (k % 2 == 0) ? Rational(1) : Rational(-1);
  if (k > 1000000ull) throw std::overflow_error("rational_pow: exponent too large");

  const unsigned e = static_cast<unsigned>(k);
  return Rational(pow(numerator(base), e), pow(denominator(base), e));
}

std::string to_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

}  // namespace gentile
