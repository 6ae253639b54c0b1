#pragma once

#include "hkt/lattice.hpp"

#include <cstdint>
#include <vector>

namespace hkt {

// A finite abelian group (+) Z/d_i with a Q/2Z-valued quadratic form q and its
// Q/Z-valued bilinear form b(x, y) = (q(x + y) - q(x) - q(y)) / 2.
// q_diag[i] = q(g_i) in [0, 2); bilinear(i, j) = b(g_i, g_j) in [0, 1).
class FiniteQuadraticModule {
 public:
  FiniteQuadraticModule() = default;
  FiniteQuadraticModule(std::vector<Integer> orders, std::vector<Rational> q_diag, RatMatrix bilinear);

  const std::vector<Integer>& invariant_factors() const noexcept { return orders_; }
  const std::vector<Rational>& q_diag() const noexcept { return q_diag_; }
  const RatMatrix& bilinear() const noexcept { return bilinear_; }
  std::size_t generators() const noexcept { return orders_.size(); }
  Integer order() const;
  bool is_trivial() const noexcept { return orders_.empty(); }

  // Elements are coordinate vectors x with 0 <= x_i < d_i, listed in
  // mixed-radix order (first coordinate fastest). Throws CapExceeded when
  // the group has more than `cap` elements.
  std::vector<IntVector> elements(std::uint64_t cap = 1u << 20) const;
  Rational q(std::span<const Integer> x) const;
  Rational b(std::span<const Integer> x, std::span<const Integer> y) const;
  IntVector negate(std::span<const Integer> x) const;
  IntVector add(std::span<const Integer> x, std::span<const Integer> y) const;

  // Same module with generators listed in the order perm[0], perm[1], ...
  FiniteQuadraticModule permuted(std::span<const std::size_t> perm) const;

 private:
  std::vector<Integer> orders_;
  std::vector<Rational> q_diag_;
  RatMatrix bilinear_;
};

// Lambda^dual / Lambda for an even nondegenerate lattice.
FiniteQuadraticModule discriminant_module(const GramLattice& a);

// The module together with representatives in Lambda^dual of its generators,
// in coordinates of the lattice basis.
struct DiscriminantData {
  FiniteQuadraticModule module;
  std::vector<std::vector<Rational>> lifts;
};
DiscriminantData discriminant_data(const GramLattice& a);

struct MilgramResult {
  int invariant = 0;      // s mod 8, Gauss sum = sqrt(|D|) e^{pi i s / 4}
  double residual = 0.0;  // |sum / sqrt(|D|) - e^{pi i s / 4}|
};

// Enumerate: sum over all of D. PrimaryParts: product of the sums over the
// p-primary parts. Jordan: product over the p-adic Jordan constituents of a
// Gram matrix (lattice overload only).
enum class GaussSumMethod { Auto, Enumerate, PrimaryParts, Jordan };

inline constexpr double kMilgramTolerance = 1e-6;
inline constexpr unsigned kDefaultPrecisionBits = 200;

MilgramResult milgram(const FiniteQuadraticModule& m, unsigned precision_bits = kDefaultPrecisionBits,
                      GaussSumMethod method = GaussSumMethod::Auto);
// s mod 8; throws InconsistentForm when the residual exceeds kMilgramTolerance.
int milgram_invariant(const FiniteQuadraticModule& m, unsigned precision_bits = kDefaultPrecisionBits);

// Same invariant for d(L), computed from the Gram matrix of an even lattice.
MilgramResult milgram(const GramLattice& a, unsigned precision_bits = kDefaultPrecisionBits,
                      GaussSumMethod method = GaussSumMethod::Auto);
int milgram_invariant(const GramLattice& a, unsigned precision_bits = kDefaultPrecisionBits);

// p-adic Jordan constituents p^scale * unit of an integral symmetric matrix;
// unit is 1x1 or (p = 2 only) 2x2 with even diagonal and odd off-diagonal.
struct JordanBlock {
  int scale = 0;
  RatMatrix unit;
};
std::vector<JordanBlock> jordan_decomposition(const IntMatrix& gram, const Integer& p);

}  // namespace hkt
