#pragma once

#include "hkt/matrix.hpp"

#include <optional>
#include <vector>

// Integral binary quadratic forms a x^2 + b xy + c y^2 under GL2(Z).
// A matrix M acts by (f . M)(v) = f(M v), so f . (MN) = (f . M) . N and the
// Gram matrix transforms as M^T G M.
namespace hkt::binary {

struct BinaryForm {
  Integer a;
  Integer b;
  Integer c;

  Integer discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

// The form v -> (v, v) of a 2x2 Gram matrix.
BinaryForm from_gram(const IntMatrix& gram);
BinaryForm transform(const BinaryForm& f, const IntMatrix& m);
Integer evaluate(const BinaryForm& f, const Integer& x, const Integer& y);

// Some M in GL2(Z) with g == transform(f, M), if one exists. Forms must be
// nondegenerate (discriminant != 0).
std::optional<IntMatrix> find_equivalence(const BinaryForm& f, const BinaryForm& g);

// Generators of the full orthogonal group O(f) inside GL2(Z).
std::vector<IntMatrix> automorphism_generators(const BinaryForm& f);

// Reduced representative under SL2(Z) together with the transformation, for
// forms with non-square positive discriminant.
struct Reduction {
  BinaryForm form;
  IntMatrix transform;
};
Reduction reduce_indefinite(const BinaryForm& f);
// The reduction cycle starting at a reduced form; entry i is (f_i, P_i) with
// f_i == transform(start, P_i). The last entry closes the cycle.
std::vector<Reduction> reduction_cycle(const BinaryForm& reduced);
Reduction reduce_definite(const BinaryForm& f);

}  // namespace hkt::binary
