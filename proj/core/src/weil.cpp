#include "hkt/weil.hpp"

#include "hkt/error.hpp"

#include <cmath>
#include <numbers>

namespace hkt {
namespace {

using Element = CyclotomicRing::Element;

std::int64_t scaled_mod(const Rational& r, long n) {
  Rational v = r * Rational(n);
  if (v.get_den() != 1) fail(ErrorCode::InternalError, "level does not clear denominators");
  return mod(Integer(v.get_num()), Integer(n)).get_si();
}

long phase0(const WeilRepMatrices& w) {
  long p = w.level / 8 * w.milgram;
  return w.dual ? p : -p;
}

}  // namespace

WeilRepMatrices weil_matrices(const FiniteQuadraticModule& m, bool dual, unsigned precision_bits) {
  WeilRepMatrices w;
  w.module = m;
  w.dual = dual;
  w.milgram = milgram_invariant(m, precision_bits);
  w.order = m.order();

  const std::size_t g = m.generators();
  Integer level = 8;
  for (std::size_t i = 0; i < g; ++i) {
    level = lcm(level, Rational(m.q_diag()[i] / 2).get_den());
    for (std::size_t j = 0; j < g; ++j) level = lcm(level, m.bilinear()(i, j).get_den());
  }
  if (!level.fits_slong_p() || level > 1000000) fail(ErrorCode::CapExceeded, "level of module too large");
  const long n = level.get_si();
  w.level = n;

  std::vector<std::int64_t> half_q(g), bil(g * g), orders(g), stride(g);
  std::int64_t acc = 1;
  for (std::size_t i = 0; i < g; ++i) {
    half_q[i] = scaled_mod(m.q_diag()[i] / 2, n);
    orders[i] = m.invariant_factors()[i].get_si();
    stride[i] = acc;
    acc *= orders[i];
    for (std::size_t j = 0; j < g; ++j) bil[i * g + j] = scaled_mod(m.bilinear()(i, j), n);
  }

  w.elements = m.elements();
  const std::size_t size = w.elements.size();
  std::vector<std::vector<std::int64_t>> coords(size, std::vector<std::int64_t>(g));
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < g; ++i) coords[k][i] = w.elements[k][i].get_si();

  const long sign = dual ? -1 : 1;
  w.t.resize(size);
  w.negation.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    const auto& x = coords[k];
    std::int64_t v = 0, neg = 0;
    for (std::size_t i = 0; i < g; ++i) {
      v = (v + (x[i] * x[i] % n) * half_q[i]) % n;
      for (std::size_t j = i + 1; j < g; ++j) v = (v + (x[i] * x[j] % n) * bil[i * g + j]) % n;
      neg += ((orders[i] - x[i]) % orders[i]) * stride[i];
    }
    w.t[k] = ((sign * v) % n + n) % n;
    w.negation[k] = static_cast<std::size_t>(neg);
  }

  const long p0 = phase0(w);
  w.s = Matrix<long>(size, size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t c = a; c < size; ++c) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < g; ++i) {
        if (coords[a][i] == 0) continue;
        for (std::size_t j = 0; j < g; ++j) v = (v + (coords[a][i] * coords[c][j] % n) * bil[i * g + j]) % n;
      }
      long e = ((p0 - sign * v) % n + n) % n;
      w.s(a, c) = e;
      w.s(c, a) = e;
    }
  return w;
}

WeilRelationReport check_weil_relations(const WeilRepMatrices& w) {
  WeilRelationReport r;
  const CyclotomicRing ring(w.level);
  const std::size_t size = w.size();
  const long n = w.level;
  const long p0 = phase0(w);
  const std::int64_t order = w.order.get_si();
  const auto& m = w.module;

  // T is diagonal with root-of-unity entries by construction; check that it
  // is compatible with the pairing used by S.
  r.t_diagonal_unitary = true;
  auto index_of = [&](const IntVector& x) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      idx += x[i].get_ui() * stride;
      stride *= m.invariant_factors()[i].get_ui();
    }
    return idx;
  };
  for (std::size_t a = 0; a < size && r.t_diagonal_unitary; ++a)
    for (std::size_t c = 0; c < size; ++c) {
      std::size_t sum = index_of(m.add(w.elements[a], w.elements[c]));
      long lhs = w.t[sum] - w.t[a] - w.t[c] + (w.s(a, c) - p0);
      if (((lhs % n) + n) % n != 0) {
        r.t_diagonal_unitary = false;
        break;
      }
    }

  r.s_symmetric = true;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t c = 0; c < a; ++c)
      if (w.s(a, c) != w.s(c, a)) r.s_symmetric = false;

  r.unitary = true;
  for (std::size_t a = 0; a < size && r.unitary; ++a)
    for (std::size_t c = 0; c < size; ++c) {
      Element e = ring.zero();
      for (std::size_t d = 0; d < size; ++d) ++e[static_cast<std::size_t>(ring.reduce_exponent(w.s(a, d) - w.s(c, d)))];
      if (!ring.equal(e, ring.root(0, a == c ? order : 0))) {
        r.unitary = false;
        break;
      }
    }

  Element gauss = ring.zero();
  for (std::size_t a = 0; a < size; ++a) ++gauss[static_cast<std::size_t>(ring.reduce_exponent(p0 + w.t[a]))];
  double numeric = 0;
  for (long k = 0; k < n; ++k)
    numeric += static_cast<double>(gauss[static_cast<std::size_t>(k)]) * std::cos(2 * std::numbers::pi * k / n);
  r.gauss_sum_is_root = ring.equal(gauss, ring.conjugate(gauss)) &&
                        ring.equal(ring.multiply(gauss, gauss), ring.root(0, order)) && numeric > 0;

  // E^2 as group-ring entries.
  std::vector<Element> e2(size * size, ring.zero());
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t c = 0; c < size; ++c)
      for (std::size_t d = 0; d < size; ++d)
        ++e2[a * size + c][static_cast<std::size_t>(ring.reduce_exponent(w.s(a, d) + w.s(d, c)))];
  r.s_squared = true;
  for (std::size_t a = 0; a < size && r.s_squared; ++a)
    for (std::size_t c = 0; c < size; ++c) {
      Element expected = w.negation[a] == c ? ring.root(2 * p0, order) : ring.zero();
      if (!ring.equal(e2[a * size + c], expected)) {
        r.s_squared = false;
        break;
      }
    }

  // Multiply a group-ring matrix on the right by a monomial matrix zeta^{exp(d, c)}.
  auto times_monomial = [&](const std::vector<Element>& x, auto exponent) {
    std::vector<Element> y(size * size, ring.zero());
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t d = 0; d < size; ++d) {
        const Element& xe = x[a * size + d];
        for (long k = 0; k < n; ++k) {
          std::int64_t coeff = xe[static_cast<std::size_t>(k)];
          if (coeff == 0) continue;
          for (std::size_t c = 0; c < size; ++c)
            y[a * size + c][static_cast<std::size_t>(ring.reduce_exponent(k + exponent(d, c)))] += coeff;
        }
      }
    return y;
  };

  // (ET)^3 = R E^2, with E^2 taken from its computed entries.
  auto et = [&](std::size_t d, std::size_t c) { return w.s(d, c) + w.t[c]; };
  std::vector<Element> a1(size * size, ring.zero());
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t c = 0; c < size; ++c) a1[a * size + c] = ring.root(et(a, c));
  std::vector<Element> a3 = times_monomial(times_monomial(a1, et), et);
  r.braid = true;
  for (std::size_t a = 0; a < size && r.braid; ++a)
    for (std::size_t c = 0; c < size; ++c) {
      const Element& rhs_entry = e2[a * size + c];
      Element rhs = ring.zero();
      for (long k = 0; k < n; ++k)
        if (rhs_entry[static_cast<std::size_t>(k)] != 0)
          rhs = ring.add(rhs, ring.scale(ring.shift(gauss, k), rhs_entry[static_cast<std::size_t>(k)]));
      if (!ring.equal(a3[a * size + c], rhs)) {
        r.braid = false;
        break;
      }
    }

  auto es = [&](std::size_t d, std::size_t c) { return w.s(d, c); };
  std::vector<Element> e4 = times_monomial(times_monomial(e2, es), es);
  r.s_fourth = true;
  for (std::size_t a = 0; a < size && r.s_fourth; ++a)
    for (std::size_t c = 0; c < size; ++c) {
      Element expected = a == c ? ring.root(4 * p0, order * order) : ring.zero();
      if (!ring.equal(e4[a * size + c], expected)) {
        r.s_fourth = false;
        break;
      }
    }
  return r;
}

}  // namespace hkt
