#include "hkt/cusp_dim.hpp"
#include "hkt/error.hpp"
#include "hkt/lattice.hpp"
#include "hkt/quadratic_module.hpp"
#include "oracles/elimination.hpp"
#include "oracles/random_lattices.hpp"

#include <gtest/gtest.h>

using namespace hkt;

namespace {

constexpr std::uint64_t kSeed = 20240611;

}  // namespace

TEST(Properties, DeterminantAndSignatureAdditive) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_even_block(rng, 1 + trial % 5, 8);
    auto b = oracle::random_even_block(rng, 1 + (trial / 5) % 5, 8);
    auto s = direct_sum(a, b);
    EXPECT_EQ(determinant(s), determinant(a) * determinant(b));
    Signature sa = signature(a), sb = signature(b), ss = signature(s);
    EXPECT_EQ(ss.positive, sa.positive + sb.positive);
    EXPECT_EQ(ss.negative, sa.negative + sb.negative);
  }
}

TEST(Properties, SignatureMatchesOracles) {
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_even_sum(rng, 10, 8);
    Signature s = signature(a);
    EXPECT_EQ(s.positive + s.negative, a.rank());
    EXPECT_EQ(Rational(determinant(a)), oracle::gauss_determinant(a.gram()));
    auto [p, q] = oracle::inertia(a.gram());
    EXPECT_EQ(s.positive, p);
    EXPECT_EQ(s.negative, q);
    EXPECT_EQ(sgn(determinant(a)), s.negative % 2 == 0 ? 1 : -1);
  }
}

TEST(Properties, MilgramIsSignatureModEight) {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_even_sum(rng, 10, 8);
    Signature s = signature(a);
    const int expected = static_cast<int>(((static_cast<long>(s.positive) - static_cast<long>(s.negative)) % 8 + 8) % 8);
    auto r = milgram(a);
    EXPECT_EQ(r.invariant, expected) << "rank " << a.rank() << " det " << determinant(a).get_str();
    EXPECT_LT(r.residual, kMilgramTolerance);
  }
}

TEST(Properties, JordanClosedFormsMatchEnumeration) {
  std::mt19937_64 rng(kSeed + 3);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto a = oracle::random_even_block(rng, 1 + trial % 4, 8);
    if (abs(determinant(a)) > 5000) continue;
    auto e = milgram(discriminant_module(a), 200, GaussSumMethod::Enumerate);
    auto j = milgram(a, 200, GaussSumMethod::Jordan);
    auto p = milgram(discriminant_module(a), 200, GaussSumMethod::PrimaryParts);
    EXPECT_EQ(e.invariant, j.invariant) << a.gram()(0, 0).get_str();
    EXPECT_EQ(e.invariant, p.invariant);
    EXPECT_LT(e.residual, 1e-20);
    ++compared;
  }
  EXPECT_GT(compared, 200);
}

TEST(Properties, IsometryIsAnEquivalence) {
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = oracle::random_even_block(rng, 2, 8);
    IntMatrix m(2, 2);
    do {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = coeff(rng);
    } while (abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) != 1);
    GramLattice b(m.transpose() * a.gram() * m);
    EXPECT_TRUE(is_isometric_rank2(a, a));
    EXPECT_TRUE(is_isometric_rank2(a, b));
    EXPECT_TRUE(is_isometric_rank2(b, a));
    auto c = oracle::random_even_block(rng, 2, 8);
    EXPECT_EQ(is_isometric_rank2(a, c), is_isometric_rank2(c, a));
    if (is_isometric_rank2(a, c)) EXPECT_TRUE(is_isometric_rank2(b, c));
  }
}

TEST(Properties, ComplementIsOrthogonal) {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<long> coeff(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_even_sum(rng, 8, 8);
    IntVector v(a.rank());
    for (auto& x : v) x = coeff(rng);
    LatticeVector lv(v);
    if (!lv.is_primitive() || a.pairing(v, v) == 0) continue;
    auto c = orthogonal_complement_with_basis(a, lv);
    ASSERT_EQ(c.basis.cols(), a.rank() - 1);
    for (std::size_t j = 0; j < c.basis.cols(); ++j) EXPECT_EQ(a.pairing(c.basis.column(j), v), 0);
    Signature sa = signature(a), sc = signature(c.lattice);
    EXPECT_EQ(sc.positive + sc.negative + 1, sa.positive + sa.negative);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Properties, DimensionsInvariantUnderPermutation) {
  std::mt19937_64 rng(kSeed + 6);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_even_block(rng, 1 + trial % 3, 6);
    if (abs(determinant(a)) > 60) continue;
    auto m = discriminant_module(a);
    if (m.is_trivial()) continue;
    std::vector<std::size_t> perm(m.generators());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
    auto p = m.permuted(perm);
    const int s = milgram_invariant(m);
    for (int twice_k = 5; twice_k <= 24; ++twice_k) {
      if ((twice_k - s) % 2 != 0) continue;
      Rational k = make_rational(twice_k, 2);
      for (bool dual : {false, true}) {
        try {
          EXPECT_EQ(dim_cusp_forms(m, k, dual), dim_cusp_forms(p, k, dual));
          EXPECT_EQ(dim_modular_forms(m, k, dual), dim_modular_forms(p, k, dual));
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::ParityError);
        }
      }
    }
    ++checked;
  }
  EXPECT_GT(checked, 5);
}
