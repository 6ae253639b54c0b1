#include "hkt/error.hpp"
#include "hkt/lattice.hpp"
#include "oracles/elimination.hpp"

#include <gtest/gtest.h>

using namespace hkt;

namespace {

Signature sig(std::size_t p, std::size_t q) { return Signature{p, q}; }

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Standard, Hyperbolic) {
  auto u = make_standard(StandardKind::U);
  EXPECT_EQ(u.gram(), (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(determinant(u), -1);
  EXPECT_EQ(signature(u), sig(1, 1));
}

TEST(Standard, E8Negative) {
  auto e = make_standard(StandardKind::E8Neg);
  EXPECT_EQ(e.rank(), 8u);
  EXPECT_EQ(signature(e), sig(0, 8));
  EXPECT_EQ(determinant(e), 1);
  EXPECT_EQ(oracle::gauss_determinant(e.gram()), 1);
  EXPECT_EQ(oracle::inertia(e.gram()), std::make_pair(std::size_t{0}, std::size_t{8}));
  EXPECT_EQ(rescale(e8(false), -1).gram(), e.gram());
}

TEST(Standard, RankOne) {
  auto a = make_standard(StandardKind::Rank1, -2);
  EXPECT_EQ(a.gram(), (IntMatrix{{-2}}));
  EXPECT_TRUE(a.is_even());
  EXPECT_EQ(determinant(a), -2);
  expect_code(ErrorCode::InvalidParameter, [] { make_standard(StandardKind::Rank1, 3); });
  expect_code(ErrorCode::InvalidParameter, [] { make_standard(StandardKind::Rank1, 0); });
}

TEST(DirectSum, RankAndDeterminant) {
  auto uu = direct_sum(hyperbolic_plane(), hyperbolic_plane());
  EXPECT_EQ(uu.rank(), 4u);
  EXPECT_EQ(determinant(uu), 1);
  auto l2 = k3n_lattice(2);
  EXPECT_EQ(l2.rank(), 23u);
  EXPECT_EQ(signature(l2), sig(3, 20));
  EXPECT_EQ(kummer_lattice(3).rank(), 7u);
}

TEST(Rescale, Examples) {
  auto u2 = rescale(hyperbolic_plane(), 2);
  EXPECT_EQ(u2.gram(), (IntMatrix{{0, 2}, {2, 0}}));
  EXPECT_EQ(determinant(u2), -4);
  EXPECT_EQ(rescale(rank_one(2), 3).gram(), (IntMatrix{{6}}));
  expect_code(ErrorCode::InvalidParameter, [] { rescale(hyperbolic_plane(), 0); });
}

TEST(Signature, MatchesCharacteristicPolynomial) {
  for (int n = 2; n <= 5; ++n) {
    auto l = k3n_lattice(n);
    EXPECT_EQ(signature(l), sig(3, 20));
    auto [p, q] = oracle::inertia(l.gram());
    EXPECT_EQ(p, 3u);
    EXPECT_EQ(q, 20u);
  }
  for (int g = 2; g <= 6; ++g) EXPECT_EQ(signature(polarized_k3_lattice(g)), sig(2, 19));
  expect_code(ErrorCode::DegenerateLattice, [] { signature(GramLattice(IntMatrix{{0, 0}, {0, 2}})); });
}

TEST(Determinant, BlockMultiplicativity) {
  for (int n = 2; n <= 5; ++n) {
    Integer d = determinant(k3n_lattice(n));
    EXPECT_EQ(abs(d), 2 * (n - 1));
    EXPECT_EQ(Rational(d), oracle::gauss_determinant(k3n_lattice(n).gram()));
  }
  EXPECT_EQ(determinant(e8(true)), 1);
}

TEST(Complement, HyperbolicPair) {
  auto uu = direct_sum(hyperbolic_plane(), hyperbolic_plane());
  LatticeVector v(IntVector{1, 1, 0, 0});
  auto c = orthogonal_complement_with_basis(uu, v);
  EXPECT_EQ(c.lattice.rank(), 3u);
  EXPECT_EQ(signature(c.lattice), sig(1, 2));
  EXPECT_EQ(determinant(c.lattice), 2);
  for (std::size_t j = 0; j < c.basis.cols(); ++j) {
    auto col = c.basis.column(j);
    EXPECT_EQ(uu.pairing(col, v.coords()), 0);
  }
  // Isometric to <-2> + U: discriminant form Z/2 with q = -1/2 mod 2.
  auto expected = direct_sum(rank_one(-2), hyperbolic_plane());
  EXPECT_EQ(determinant(c.lattice), determinant(expected));
}

TEST(Complement, Errors) {
  expect_code(ErrorCode::DegenerateComplement,
              [] { orthogonal_complement(hyperbolic_plane(), LatticeVector(IntVector{1, 0})); });
  expect_code(ErrorCode::NonPrimitiveVector,
              [] { orthogonal_complement(hyperbolic_plane(), LatticeVector(IntVector{2, 2})); });
}

TEST(Complement, PolarizedK3) {
  auto k3 = k3_lattice();
  for (int g = 2; g <= 6; ++g) {
    IntVector h(22, 0);
    h[0] = 1;
    h[1] = g - 1;
    LatticeVector v(h);
    ASSERT_TRUE(v.is_primitive());
    EXPECT_EQ(k3.pairing(h, h), 2 * g - 2);
    auto c = orthogonal_complement(k3, v);
    EXPECT_EQ(signature(c), sig(2, 19));
    EXPECT_EQ(abs(determinant(c)), 2 * g - 2);
  }
}

TEST(Complement, SaturatedQuotient) {
  // v = (1, 2) in <2> + <-2>: w = (2, 1) spans the complement; 2w' is not
  // allowed, the basis vector itself must be primitive.
  auto a = direct_sum(rank_one(2), rank_one(-2));
  auto c = orthogonal_complement_with_basis(a, LatticeVector(IntVector{1, 2}));
  ASSERT_EQ(c.basis.cols(), 1u);
  LatticeVector w(c.basis.column(0));
  EXPECT_TRUE(w.is_primitive());
}

TEST(Isometry, BinaryExamples) {
  GramLattice sheared(IntMatrix{{0, 1}, {1, 2}});
  EXPECT_TRUE(is_isometric_rank2(sheared, hyperbolic_plane()));
  auto m = find_isometry_rank2(hyperbolic_plane(), sheared);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->transpose() * hyperbolic_plane().gram() * *m, sheared.gram());
  EXPECT_FALSE(is_isometric_rank2(direct_sum(rank_one(2), rank_one(-2)), hyperbolic_plane()));
  EXPECT_TRUE(is_isometric_rank2(rank_one(-2), rank_one(-2)));
  expect_code(ErrorCode::UnsupportedRank, [] { is_isometric_rank2(e8(true), e8(true)); });
}

TEST(Isometry, DefiniteAndIndefiniteClasses) {
  // Two classes of discriminant -20 (definite): x^2 + 5y^2 and 2x^2 + 2xy + 3y^2.
  GramLattice a(IntMatrix{{2, 0}, {0, 10}}), b(IntMatrix{{4, 2}, {2, 6}});
  EXPECT_FALSE(is_isometric_rank2(a, b));
  EXPECT_TRUE(is_isometric_rank2(b, GramLattice(IntMatrix{{6, -2}, {-2, 4}})));
  // Indefinite, disc 12: [[2,0],[0,-6]] vs [[-2,0],[0,6]] are improperly related only.
  GramLattice c(IntMatrix{{2, 0}, {0, -6}}), d(IntMatrix{{-2, 0}, {0, 6}});
  EXPECT_EQ(is_isometric_rank2(c, d), false);
  GramLattice e(IntMatrix{{2, 2}, {2, -4}});
  EXPECT_TRUE(is_isometric_rank2(c, e));
}

TEST(Named, Catalog) {
  EXPECT_EQ(k3n_lattice(1).rank(), 22u);
  EXPECT_EQ(signature(k3_lattice()), sig(3, 19));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(signature(kummer_lattice(n)), sig(3, 4));
    EXPECT_EQ(abs(determinant(kummer_lattice(n))), 2 * (n + 1));
  }
}
