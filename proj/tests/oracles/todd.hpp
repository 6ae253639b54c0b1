#pragma once

#include "hkt/arith.hpp"

#include <vector>

// td_i evaluated on explicit Chern roots: the degree-i coefficient of
// prod_j x_j t / (1 - e^{-x_j t}), with x / (1 - e^{-x}) = sum B_k (-x)^k / k!.

namespace oracle {

inline std::vector<hkt::Rational> bernoulli(int n) {
  std::vector<hkt::Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    hkt::Rational s = 0;
    hkt::Integer binom = 1;  // C(m + 1, k)
    for (int k = 0; k < m; ++k) {
      s += hkt::Rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / hkt::Rational(m + 1);
  }
  return b;
}

// Coefficients td_0..td_max for the given roots.
inline std::vector<hkt::Rational> todd_on_roots(const std::vector<hkt::Rational>& roots, int max) {
  auto b = bernoulli(max);
  std::vector<hkt::Rational> series(static_cast<std::size_t>(max) + 1, 0);
  series[0] = 1;
  for (const auto& x : roots) {
    std::vector<hkt::Rational> factor(static_cast<std::size_t>(max) + 1);
    hkt::Rational power = 1;
    for (int k = 0; k <= max; ++k) {
      factor[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)] * power / hkt::Rational(hkt::factorial(static_cast<unsigned>(k)));
      power *= -x;
    }
    std::vector<hkt::Rational> next(series.size(), 0);
    for (int i = 0; i <= max; ++i)
      for (int k = 0; i + k <= max; ++k)
        next[static_cast<std::size_t>(i + k)] += series[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(k)];
    series = std::move(next);
  }
  return series;
}

// Elementary symmetric functions e_1..e_len of the roots (zero past the count).
inline std::vector<hkt::Rational> elementary(const std::vector<hkt::Rational>& roots, std::size_t len) {
  std::vector<hkt::Rational> e(len + 1, 0);
  e[0] = 1;
  for (const auto& x : roots)
    for (std::size_t k = len; k >= 1; --k) e[k] += e[k - 1] * x;
  return e;
}

}  // namespace oracle
