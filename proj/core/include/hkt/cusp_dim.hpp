#pragma once

#include "hkt/quadratic_module.hpp"

#include <optional>
#include <vector>

namespace hkt {

// Vector-valued modular forms of weight k for the Weil representation of a
// finite quadratic module (or its dual). Convention: f(M tau) =
// phi(tau)^{2k} rho(M, phi) f(tau), so -I acts through e^{pi i k} rho(Z) and
// forms live in the (+1)- or (-1)-eigenspace of g -> -g according to
// (2k - s)/2 mod 2, with s the Milgram invariant (-s for the dual).
struct DimensionData {
  Rational weight;
  bool dual = false;
  bool symmetric = true;
  Integer orbit_count;      // dimension of the relevant eigenspace
  Integer isotropic_count;  // orbits with q(g)/2 in Z
  Rational alpha_s;
  Rational alpha_st;
  Rational alpha_t;
  Integer modular;  // dim M_k
  Integer cusp;     // dim S_k
};

// Throws UnsupportedWeight for k < 2 and ParityError when 2k - s is odd.
DimensionData dimension_data(const FiniteQuadraticModule& m, const Rational& k, bool dual,
                             unsigned precision_bits = kDefaultPrecisionBits);
Integer dim_modular_forms(const FiniteQuadraticModule& m, const Rational& k, bool dual,
                          unsigned precision_bits = kDefaultPrecisionBits);
Integer dim_cusp_forms(const FiniteQuadraticModule& m, const Rational& k, bool dual,
                       unsigned precision_bits = kDefaultPrecisionBits);

// Dimension of vectors fixed by the whole representation (weight 0 forms).
Integer invariant_dimension(const FiniteQuadraticModule& m, bool dual,
                            unsigned precision_bits = kDefaultPrecisionBits);

// Bounds dim SC^r <= dim SC^{r-1} + dim S_{(b+2)/2}(dual rho) for a lattice of
// signature (2, b). Entry r is empty when genus r is unsupported (r >= 2).
struct ScRankBound {
  Rational weight;
  Integer cusp_dim;
  std::vector<std::optional<Integer>> bounds;
};
ScRankBound sc_rank_bound(const GramLattice& lattice, int r_max,
                          unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace hkt
