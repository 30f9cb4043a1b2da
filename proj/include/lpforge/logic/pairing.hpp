#pragma once

#include <cmath>

#include "lpforge/scalar.hpp"

namespace lpforge::logic {

// Cantor pairing j(x,y) = (x+y)(x+y+1)/2 + y, a bijection ℕ²→ℕ that is
// strictly monotone in each argument.
inline BigInt cantor_pair(const BigInt& x, const BigInt& y) {
  if (sgn(x) < 0 || sgn(y) < 0)
    throw ParameterError("cantor_pair: arguments must be naturals");
  const BigInt s = x + y;
  return s * (s + 1) / 2 + y;
}

inline BigInt cantor_pair(unsigned long long x, unsigned long long y) {
  BigInt bx, by;
  mpz_import(bx.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  mpz_import(by.get_mpz_t(), 1, 1, sizeof(y), 0, 0, &y);
  return cantor_pair(bx, by);
}

// M(b)(n) = j(b·2^{n+2}, 2^{n+1}-1), the majorant of the exponent constant
// for any b >= p.
inline BigInt majorant_value(unsigned long b, unsigned long n) {
  if (b < 1) throw ParameterError("majorant: b must be >= 1");
  BigInt two_n1;
  mpz_ui_pow_ui(two_n1.get_mpz_t(), 2, n + 1);
  return cantor_pair(BigInt(2 * b * two_n1), BigInt(two_n1 - 1));
}

// M(b) as a function on naturals.
inline auto majorant_M(unsigned long b) {
  if (b < 1) throw ParameterError("majorant: b must be >= 1");
  return [b](unsigned long n) { return majorant_value(b, n); };
}

// Canonical code of a real r at precision n: the numerator round(r·2^{n+1})
// is sign-folded onto the naturals (z >= 0 ↦ 2z, z < 0 ↦ -2z-1) and paired
// with the denominator index 2^{n+1}-1. For r ∈ [0,b] the folded numerator
// is at most b·2^{n+2}, so M(b) dominates these codes.
inline BigInt real_code(double r, unsigned long n) {
  const double scaled = std::nearbyint(std::ldexp(r, static_cast<int>(n) + 1));
  BigInt z(scaled);
  BigInt folded = sgn(z) >= 0 ? BigInt(2 * z) : BigInt(-2 * z - 1);
  BigInt two_n1;
  mpz_ui_pow_ui(two_n1.get_mpz_t(), 2, n + 1);
  return cantor_pair(folded, BigInt(two_n1 - 1));
}

}  // namespace lpforge::logic
