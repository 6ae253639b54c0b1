#pragma once

// Classical dimensions for SL2(Z) and the Jacobi/Kohnen comparisons, written
// without any representation theory.

namespace oracle {

// dim M_k(SL2(Z)) from the valence formula.
inline long dim_modular(long k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k == 0) return 1;
  if (k == 2) return 0;
  return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

inline long dim_cusp(long k) {
  if (k < 12 || k % 2 != 0) return 0;
  return dim_modular(k) - 1;
}

// dim J_{k,m} (Eichler-Zagier) for k >= 4, which equals dim M_{k-1/2} of the
// Weil representation of <-2m>.
inline long dim_jacobi(long k, long m) {
  long s = 0;
  auto ceil_div = [](long a, long b) { return (a + b - 1) / b; };
  if (k % 2 == 0) {
    for (long j = 0; j <= m; ++j) s += dim_modular(k + 2 * j) - ceil_div(j * j, 4 * m);
  } else {
    for (long j = 1; j <= m - 1; ++j) s += dim_modular(k + 2 * j - 1) - ceil_div(j * j, 4 * m);
  }
  return s;
}

}  // namespace oracle
