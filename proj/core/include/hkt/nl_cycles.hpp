#pragma once

#include "hkt/lattice.hpp"

#include <string>
#include <vector>

namespace hkt {

struct Overlattice {
  GramLattice lattice;
  Integer index;
  RatMatrix basis;  // columns in the coordinates of s
};

// Proper even overlattices of finite index, from isotropic subgroups of the
// discriminant form. Rank <= 2 results are distinct up to isometry; rank 3
// results are listed once per isotropic subgroup.
std::vector<Overlattice> overlattices(const GramLattice& s);

struct Saturation {
  GramLattice lattice;
  IntMatrix basis;  // columns in ambient coordinates
  Integer index;    // [saturation : span of the input]
};
Saturation saturation(const GramLattice& ambient, const std::vector<LatticeVector>& sub_basis);

// Number of finite-index sublattices of t isometric to s, up to O(t).
Integer embedding_multiplicity(const GramLattice& s, const GramLattice& t, const Integer& max_index = 1000);

// Rank-2 even lattices of signature (1, 1) with a primitive vector of square
// 2g - 2 and |disc| <= max_disc, up to isometry, ordered by decreasing |disc|
// then Gram entries.
struct NLFamily {
  Integer h_square;
  std::vector<GramLattice> members;
  std::vector<std::vector<bool>> embeds;  // embeds[i][j]: member i is a proper sublattice of member j
};

inline constexpr long kMaxDiscriminantCap = 4096;

NLFamily nl_family(int g, const Integer& max_disc, unsigned threads = 1);
NLFamily make_family(const Integer& h_square, std::vector<GramLattice> members, unsigned threads = 1);

// Whether the lattice contains a primitive vector of the given square.
bool primitively_represents(const GramLattice& lattice, const Integer& square);

struct BasisChange {
  IntMatrix matrix;   // Z(member i) = sum_j matrix(i, j) c(member j)
  IntMatrix inverse;  // c(member i) = sum_j inverse(i, j) Z(member j)
  Integer determinant;
};

// Throws IncompleteFamily when an overlattice of a member that still
// primitively represents h_square is missing from the family.
BasisChange nl_basis_change(const NLFamily& fam, unsigned threads = 1);

// Z(beta) = lambda^{r - rank beta} * (sum over rank-beta connected cycles).
struct SpecialCycleExpansion {
  int lambda_power = 0;
  int family_rank = 0;
  std::string text;
};
SpecialCycleExpansion special_cycle_expand(int beta_rank, int r);

}  // namespace hkt
