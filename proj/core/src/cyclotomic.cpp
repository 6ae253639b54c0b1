#include "hkt/cyclotomic.hpp"

#include "hkt/error.hpp"

#include <map>

namespace hkt {
namespace {

using Poly = std::vector<std::int64_t>;

// Exact division by a monic polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(long n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "cyclotomic order must be positive");
  static thread_local std::map<long, Poly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  cache.emplace(n, p);
  return p;
}

CyclotomicRing::CyclotomicRing(long n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

CyclotomicRing::Element CyclotomicRing::root(long exponent, std::int64_t coeff) const {
  Element e = zero();
  e[static_cast<std::size_t>(reduce_exponent(exponent))] = coeff;
  return e;
}

CyclotomicRing::Element CyclotomicRing::add(const Element& a, const Element& b) const {
  Element c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

CyclotomicRing::Element CyclotomicRing::subtract(const Element& a, const Element& b) const {
  Element c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

CyclotomicRing::Element CyclotomicRing::multiply(const Element& a, const Element& b) const {
  Element c = zero();
  const std::size_t n = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) c[(i + j) % n] += a[i] * b[j];
  }
  return c;
}

CyclotomicRing::Element CyclotomicRing::shift(const Element& a, long exponent) const {
  Element c = zero();
  const std::size_t n = static_cast<std::size_t>(n_);
  const std::size_t s = static_cast<std::size_t>(reduce_exponent(exponent));
  for (std::size_t i = 0; i < n; ++i) c[(i + s) % n] = a[i];
  return c;
}

CyclotomicRing::Element CyclotomicRing::conjugate(const Element& a) const {
  Element c = zero();
  const std::size_t n = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < n; ++i) c[(n - i) % n] = a[i];
  return c;
}

CyclotomicRing::Element CyclotomicRing::scale(const Element& a, std::int64_t k) const {
  Element c = a;
  for (auto& x : c) x *= k;
  return c;
}

bool CyclotomicRing::is_zero(const Element& a) const {
  Poly r = a;
  const std::size_t dn = phi_.size() - 1;
  for (std::size_t i = r.size(); i-- > dn;) {
    std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[i - dn + j] -= c * phi_[j];
  }
  for (std::size_t i = 0; i < dn && i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

}  // namespace hkt
