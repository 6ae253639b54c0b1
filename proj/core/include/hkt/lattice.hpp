#pragma once

#include "hkt/matrix.hpp"

#include <optional>
#include <string>

namespace hkt {

// An integral lattice given by its symmetric Gram matrix in a fixed basis.
class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(IntMatrix gram, std::string label = {});

  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return gram_.rows(); }
  const std::string& label() const noexcept { return label_; }
  bool is_even() const noexcept { return even_; }

  GramLattice relabeled(std::string label) const;
  Integer pairing(std::span<const Integer> x, std::span<const Integer> y) const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) {
    return a.gram_ == b.gram_ && a.label_ == b.label_;
  }

 private:
  IntMatrix gram_;
  std::string label_;
  bool even_ = true;
};

class LatticeVector {
 public:
  explicit LatticeVector(IntVector coords);

  const IntVector& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  bool is_primitive() const noexcept { return primitive_; }

 private:
  IntVector coords_;
  bool primitive_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class StandardKind { U, E8Neg, Rank1 };

// U, E8(-1), or <entry> (entry a nonzero even integer, only for Rank1).
GramLattice make_standard(StandardKind kind, const Integer& entry = 0);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice rescale(const GramLattice& a, const Integer& factor);
Signature signature(const GramLattice& a);
Integer determinant(const GramLattice& a);

// Saturated complement {w : (w, v) = 0} with its induced Gram matrix; the
// columns of `basis` are the complement basis in ambient coordinates.
struct Complement {
  GramLattice lattice;
  IntMatrix basis;
};
Complement orthogonal_complement_with_basis(const GramLattice& a, const LatticeVector& v);
GramLattice orthogonal_complement(const GramLattice& a, const LatticeVector& v);

// Integral equivalence of lattices of rank <= 2 under the full orthogonal group.
bool is_isometric_rank2(const GramLattice& a, const GramLattice& b);
// M with M^T a.gram M == b.gram, when the lattices are isometric.
std::optional<IntMatrix> find_isometry_rank2(const GramLattice& a, const GramLattice& b);

// Named building blocks.
GramLattice hyperbolic_plane();
GramLattice e8(bool negative);
GramLattice rank_one(const Integer& entry);
GramLattice orthogonal_sum(std::initializer_list<GramLattice> parts, std::string label = {});
GramLattice repeat_sum(const GramLattice& part, std::size_t copies);

// U^3 + E8(-1)^2 + <-2(n-1)>; for n = 1 the degenerate summand is dropped,
// leaving the K3 lattice.
GramLattice k3n_lattice(int n);
// U^3 + <-2(n+1)>.
GramLattice kummer_lattice(int n);
// U^3 + E8(-1)^2, signature (3, 19).
GramLattice k3_lattice();
// <2-2g> + U^2 + E8(-1)^2, signature (2, 19).
GramLattice polarized_k3_lattice(int g);

}  // namespace hkt
