#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hkt {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" or "p"; always in lowest terms with positive denominator.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);
// Least nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);
// Representative of r in [0, m) for a positive integer modulus m.
Rational mod(const Rational& r, const Integer& m);
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
Integer factorial(unsigned n);
// Inverse of a modulo m; a must be a unit.
Integer inverse_mod(const Integer& a, const Integer& m);
// p-adic valuation of a nonzero rational.
int valuation(const Rational& r, const Integer& p);
int valuation(const Integer& z, const Integer& p);
std::vector<Integer> prime_factors(Integer n);

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hkt
