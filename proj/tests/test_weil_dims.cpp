#include "hkt/cusp_dim.hpp"
#include "hkt/error.hpp"
#include "hkt/lattice.hpp"
#include "hkt/weil.hpp"
#include "oracles/modular.hpp"

#include <gtest/gtest.h>

using namespace hkt;

namespace {

std::vector<FiniteQuadraticModule> small_modules() {
  std::vector<FiniteQuadraticModule> out;
  for (long e : {2, -2, 4, 6, -6, 8, 10, -12, 24, -48})
    out.push_back(discriminant_module(rank_one(e)));
  out.push_back(discriminant_module(direct_sum(rank_one(2), rank_one(-2))));
  out.push_back(discriminant_module(GramLattice(IntMatrix{{2, 1}, {1, -4}})));
  out.push_back(discriminant_module(direct_sum(rank_one(-4), rank_one(6))));
  return out;
}

}  // namespace

TEST(Weil, TrivialModule) {
  auto w = weil_matrices(FiniteQuadraticModule(), false);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.s(0, 0) % w.level, 0);
  EXPECT_TRUE(check_weil_relations(w).all());
}

TEST(Weil, OrderTwo) {
  auto w = weil_matrices(discriminant_module(rank_one(2)), false);
  ASSERT_EQ(w.size(), 2u);
  // sqrt|D| S has unimodular entries, so |S_gd| = 1/sqrt 2 for all pairs.
  EXPECT_TRUE(check_weil_relations(w).unitary);
}

TEST(Weil, RelationsExactBothFlags) {
  for (const auto& m : small_modules())
    for (bool dual : {false, true}) {
      auto rep = check_weil_relations(weil_matrices(m, dual));
      EXPECT_TRUE(rep.t_diagonal_unitary);
      EXPECT_TRUE(rep.s_symmetric);
      EXPECT_TRUE(rep.unitary);
      EXPECT_TRUE(rep.gauss_sum_is_root);
      EXPECT_TRUE(rep.s_squared);
      EXPECT_TRUE(rep.braid);
      EXPECT_TRUE(rep.s_fourth);
    }
}

TEST(Weil, DualConjugatesRoots) {
  auto m = discriminant_module(rank_one(-6));
  auto a = weil_matrices(m, false), b = weil_matrices(m, true);
  ASSERT_EQ(a.level, b.level);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ((a.t[i] + b.t[i]) % a.level, 0);
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ((a.s(i, j) + b.s(i, j)) % a.level, 0);
  }
}

TEST(Dimensions, TrivialModuleMatchesValenceFormula) {
  FiniteQuadraticModule triv;
  for (long k = 4; k <= 40; k += 2) {
    EXPECT_EQ(dim_cusp_forms(triv, k, false), oracle::dim_cusp(k)) << k;
    EXPECT_EQ(dim_modular_forms(triv, k, false), oracle::dim_modular(k)) << k;
  }
  EXPECT_EQ(dim_cusp_forms(triv, 12, false), 1);
  EXPECT_EQ(dim_cusp_forms(triv, 14, false), 0);
  EXPECT_EQ(dim_cusp_forms(triv, 16, false), 1);
  EXPECT_EQ(dim_cusp_forms(triv, 26, false), 1);
  EXPECT_EQ(dim_cusp_forms(triv, 4, false), 0);
}

TEST(Dimensions, KohnenPlusSpace) {
  // rho of <2> at weight kappa + 1/2 matches M_{2 kappa} (dual for odd kappa).
  auto m = discriminant_module(rank_one(2));
  for (long kappa = 2; kappa <= 20; ++kappa) {
    bool dual = kappa % 2 == 1;
    EXPECT_EQ(dim_cusp_forms(m, make_rational(2 * kappa + 1, 2), dual), oracle::dim_cusp(2 * kappa)) << kappa;
    EXPECT_EQ(dim_modular_forms(m, make_rational(2 * kappa + 1, 2), dual), oracle::dim_modular(2 * kappa)) << kappa;
  }
}

TEST(Dimensions, JacobiForms) {
  for (long m = 1; m <= 6; ++m) {
    auto mod = discriminant_module(rank_one(-2 * m));
    for (long k = 4; k <= 14; ++k)
      EXPECT_EQ(dim_modular_forms(mod, make_rational(2 * k - 1, 2), false), oracle::dim_jacobi(k, m))
          << "m=" << m << " k=" << k;
  }
}

TEST(Dimensions, Errors) {
  FiniteQuadraticModule triv;
  try {
    dim_cusp_forms(triv, make_rational(3, 2), false);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedWeight);
  }
  try {
    dim_cusp_forms(triv, make_rational(5, 2), false);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParityError);
  }
}

TEST(Dimensions, UnimodularSummandInvariance) {
  auto a = discriminant_module(rank_one(-4));
  auto b = discriminant_module(direct_sum(rank_one(-4), direct_sum(hyperbolic_plane(), e8(true))));
  for (long twice = 5; twice <= 31; twice += 2)
    for (bool dual : {false, true}) {
      Rational k = make_rational(twice, 2);
      try {
        EXPECT_EQ(dim_cusp_forms(a, k, dual), dim_cusp_forms(b, k, dual));
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParityError);
      }
    }
}

TEST(Dimensions, PolarizedK3WeightTwentyOneHalves) {
  // g = 2: d(Lambda_2) = <-2>, whose dual is d(<2>); Kohnen gives M_20.
  auto two = discriminant_module(polarized_k3_lattice(2));
  EXPECT_EQ(dim_cusp_forms(two, make_rational(21, 2), true), oracle::dim_cusp(20));
  EXPECT_EQ(dim_modular_forms(two, make_rational(21, 2), true), oracle::dim_modular(20));
  // Eisenstein part: +-orbits of x in Z/(2g - 2) with x^2 = 0 mod 4(g - 1).
  for (long g = 2; g <= 12; ++g) {
    const long d = g - 1;
    long orbits = 0;
    for (long x = 0; x <= d; ++x)
      if ((x * x) % (4 * d) == 0) ++orbits;
    auto m = discriminant_module(polarized_k3_lattice(static_cast<int>(g)));
    Integer eis = dim_modular_forms(m, make_rational(21, 2), true) - dim_cusp_forms(m, make_rational(21, 2), true);
    EXPECT_EQ(eis, orbits) << "g = " << g;
  }
}

TEST(ScRankBound, PolarizedK3) {
  auto b = sc_rank_bound(polarized_k3_lattice(2), 1);
  EXPECT_EQ(b.weight, make_rational(21, 2));
  ASSERT_EQ(b.bounds.size(), 2u);
  EXPECT_EQ(*b.bounds[0], 1);
  auto m = discriminant_module(polarized_k3_lattice(2));
  EXPECT_EQ(*b.bounds[1], 1 + dim_cusp_forms(m, make_rational(21, 2), true));
  auto longer = sc_rank_bound(polarized_k3_lattice(3), 3);
  EXPECT_FALSE(longer.bounds[2].has_value());
}

TEST(ScRankBound, TrivialDiscriminant) {
  // U^2 + E8(-1)^2 + ... signature (2, 18): b + 2 = 20, weight 10.
  auto l = orthogonal_sum({hyperbolic_plane(), hyperbolic_plane(), e8(true), e8(true)});
  auto b = sc_rank_bound(l, 1);
  EXPECT_EQ(b.weight, 10);
  EXPECT_EQ(*b.bounds[1], 1 + oracle::dim_cusp(10));
}

TEST(ScRankBound, WrongSignature) {
  try {
    sc_rank_bound(k3_lattice(), 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongSignature);
  }
}
