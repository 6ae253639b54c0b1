#pragma once

#include "hkt/cyclotomic.hpp"
#include "hkt/quadratic_module.hpp"

#include <cstdint>
#include <vector>

namespace hkt {

// Weil representation of Mp_2(Z) on C[D] for a finite quadratic module D:
//   T e_g = e(q(g)/2) e_g,
//   S e_d = e(-s/8) / sqrt|D| * sum_g e(-b(g, d)) e_g,
// with s the Milgram invariant. The dual representation conjugates every root.
// All roots are powers of zeta_N, N = level(); S is stored as sqrt|D| * S.
struct WeilRepMatrices {
  FiniteQuadraticModule module;
  bool dual = false;
  int milgram = 0;
  long level = 8;
  Integer order = 1;
  std::vector<IntVector> elements;
  std::vector<std::size_t> negation;  // index of -g
  std::vector<long> t;                // T_gg = zeta^t[g]
  Matrix<long> s;                     // sqrt|D| S_gd = zeta^s(g, d)

  std::size_t size() const noexcept { return elements.size(); }
};

WeilRepMatrices weil_matrices(const FiniteQuadraticModule& m, bool dual,
                              unsigned precision_bits = kDefaultPrecisionBits);

// Exact checks in Z[zeta_N]. E = sqrt|D| S; R is the Gauss sum representing
// sqrt|D| inside Z[zeta_N].
struct WeilRelationReport {
  bool t_diagonal_unitary = false;
  bool s_symmetric = false;
  bool unitary = false;           // E conj(E)^T = |D| I
  bool gauss_sum_is_root = false;  // R = conj(R), R^2 = |D|, R > 0
  bool s_squared = false;         // S^2 = e(-s/4) (g -> -g)
  bool braid = false;             // (ST)^3 = S^2
  bool s_fourth = false;          // S^4 = e(-s/2) I

  bool all() const noexcept {
    return t_diagonal_unitary && s_symmetric && unitary && gauss_sum_is_root && s_squared && braid && s_fourth;
  }
};

WeilRelationReport check_weil_relations(const WeilRepMatrices& w);

}  // namespace hkt
