#pragma once

#include <cstdint>
#include <vector>

namespace hkt {

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(long n);

// The group ring Z[Z/n] mapped onto Z[zeta_n]. An element is a coefficient
// vector c of length n standing for sum_a c[a] zeta_n^a; equality is decided
// after reduction modulo the n-th cyclotomic polynomial.
class CyclotomicRing {
 public:
  using Element = std::vector<std::int64_t>;

  explicit CyclotomicRing(long n);

  long order() const noexcept { return n_; }
  const std::vector<std::int64_t>& modulus() const noexcept { return phi_; }

  Element zero() const { return Element(static_cast<std::size_t>(n_), 0); }
  Element root(long exponent, std::int64_t coeff = 1) const;
  long reduce_exponent(long e) const noexcept { return ((e % n_) + n_) % n_; }

  Element add(const Element& a, const Element& b) const;
  Element subtract(const Element& a, const Element& b) const;
  Element multiply(const Element& a, const Element& b) const;
  Element shift(const Element& a, long exponent) const;
  Element conjugate(const Element& a) const;
  Element scale(const Element& a, std::int64_t k) const;

  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return is_zero(subtract(a, b)); }

 private:
  long n_;
  std::vector<std::int64_t> phi_;
};

}  // namespace hkt
