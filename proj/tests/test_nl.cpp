#include "hkt/error.hpp"
#include "hkt/lattice.hpp"
#include "hkt/nl_cycles.hpp"
#include "oracles/lattices.hpp"

#include <gtest/gtest.h>

using namespace hkt;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

// Every oracle overlattice is isometric to exactly one engine overlattice with
// the same index, and the counts agree.
void expect_same_overlattices(const GramLattice& s) {
  auto engine = overlattices(s);
  auto brute = oracle::brute_overlattices(s);
  for (const auto& o : engine) EXPECT_EQ(determinant(s), o.index * o.index * determinant(o.lattice));
  if (s.rank() <= 2) {
    std::vector<std::pair<IntMatrix, Integer>> classes;
    for (const auto& b : brute) {
      GramLattice l(b.gram);
      bool known = false;
      for (const auto& [g, idx] : classes)
        if (idx == b.index && is_isometric_rank2(GramLattice(g), l)) known = true;
      if (!known) classes.emplace_back(b.gram, b.index);
    }
    ASSERT_EQ(classes.size(), engine.size()) << s.gram()(0, 0).get_str();
    for (const auto& [g, idx] : classes) {
      int hits = 0;
      for (const auto& o : engine)
        if (o.index == idx && is_isometric_rank2(o.lattice, GramLattice(g))) ++hits;
      EXPECT_EQ(hits, 1);
    }
  } else {
    ASSERT_EQ(brute.size(), engine.size());
    std::multiset<std::pair<Integer, Integer>> a, b;
    for (const auto& o : engine) a.emplace(o.index, determinant(o.lattice));
    for (const auto& o : brute) b.emplace(o.index, determinant(GramLattice(o.gram)));
    EXPECT_EQ(a, b);
  }
}

}  // namespace

TEST(Overlattices, Examples) {
  auto a = overlattices(direct_sum(rank_one(2), rank_one(-2)));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].index, 2);
  EXPECT_TRUE(is_isometric_rank2(a[0].lattice, hyperbolic_plane()));
  EXPECT_TRUE(overlattices(hyperbolic_plane()).empty());
  EXPECT_TRUE(overlattices(direct_sum(rank_one(-2), rank_one(-2))).empty());
  EXPECT_EQ(code_of([] { overlattices(e8(true)); }), ErrorCode::UnsupportedRank);
}

TEST(Overlattices, BruteForceOracleRankTwo) {
  std::vector<GramLattice> cases{direct_sum(rank_one(2), rank_one(-2)), direct_sum(rank_one(4), rank_one(-4)),
                                 direct_sum(rank_one(2), rank_one(-8)), GramLattice(IntMatrix{{4, 0}, {0, -16}}),
                                 GramLattice(IntMatrix{{8, 0}, {0, -8}}), GramLattice(IntMatrix{{4, 2}, {2, -8}}),
                                 direct_sum(rank_one(-6), rank_one(-6)), GramLattice(IntMatrix{{12, 0}, {0, -12}})};
  for (const auto& s : cases) expect_same_overlattices(s);
}

TEST(Overlattices, BruteForceOracleRankThree) {
  std::vector<GramLattice> cases{orthogonal_sum({rank_one(2), rank_one(-2), rank_one(-2)}),
                                 orthogonal_sum({rank_one(4), rank_one(-4), rank_one(2)}),
                                 orthogonal_sum({hyperbolic_plane(), rank_one(-8)}),
                                 orthogonal_sum({rank_one(2), rank_one(6), rank_one(-12)}),
                                 orthogonal_sum({rank_one(4), rank_one(-4), rank_one(-4)})};
  for (const auto& s : cases) expect_same_overlattices(s);
}

TEST(Saturation, Examples) {
  auto a = saturation(hyperbolic_plane(), {LatticeVector(IntVector{2, 0})});
  EXPECT_EQ(a.index, 2);
  EXPECT_EQ(a.basis.column(0), (IntVector{1, 0}));
  auto amb = direct_sum(hyperbolic_plane(), rank_one(-2));
  auto b = saturation(amb, {LatticeVector(IntVector{1, 1, 0}), LatticeVector(IntVector{0, 0, 2})});
  EXPECT_EQ(b.index, 2);
  auto c = saturation(amb, {LatticeVector(IntVector{1, 1, 0})});
  EXPECT_EQ(c.index, 1);
  EXPECT_EQ(code_of([&] { saturation(amb, {LatticeVector(IntVector{1, 0, 0}), LatticeVector(IntVector{2, 0, 0})}); }),
            ErrorCode::DependentVectors);
}

TEST(Multiplicity, Examples) {
  auto s = direct_sum(rank_one(2), rank_one(-2));
  EXPECT_EQ(embedding_multiplicity(s, s), 1);
  EXPECT_EQ(embedding_multiplicity(s, hyperbolic_plane()), 1);
  EXPECT_EQ(oracle::bounded_multiplicity(s, hyperbolic_plane(), 10), 1);
  EXPECT_EQ(embedding_multiplicity(GramLattice(IntMatrix{{2, 1}, {1, -2}}), hyperbolic_plane()), 0);
  EXPECT_EQ(code_of([] { embedding_multiplicity(rank_one(2), hyperbolic_plane()); }), ErrorCode::UnsupportedRank);
}

TEST(Multiplicity, HermiteEnumerationOracle) {
  for (long k = 1; k <= 8; ++k) {
    long sigma = 0;
    for (long d = 1; d <= k; ++d)
      if (k % d == 0) sigma += d;
    EXPECT_EQ(static_cast<long>(oracle::index_k_sublattices(k).size()), sigma);
  }
  auto fam = nl_family(2, 36);
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
      const auto& s = fam.members[i];
      const auto& t = fam.members[j];
      Integer m = embedding_multiplicity(s, t);
      long brute = oracle::bounded_multiplicity(s, t, 40);
      // Bounded automorphisms generate a subgroup, so its orbits can only be finer.
      EXPECT_EQ(m > 0, brute > 0);
      EXPECT_LE(m, brute);
      if (m > 0) {
        Integer ratio = determinant(s) / determinant(t);
        EXPECT_TRUE(is_square(ratio));
      }
    }
}

TEST(Family, MembersAndOrder) {
  auto fam = nl_family(3, 64);
  ASSERT_FALSE(fam.members.empty());
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const auto& m = fam.members[i];
    EXPECT_TRUE(m.is_even());
    EXPECT_LT(determinant(m), 0);
    EXPECT_TRUE(primitively_represents(m, 4));
    for (std::size_t j = i + 1; j < fam.members.size(); ++j) EXPECT_FALSE(is_isometric_rank2(m, fam.members[j]));
    if (i > 0) EXPECT_GE(abs(determinant(fam.members[i - 1])), abs(determinant(m)));
  }
  EXPECT_EQ(code_of([] { nl_family(2, kMaxDiscriminantCap + 1); }), ErrorCode::CapExceeded);
}

TEST(Family, PartialOrder) {
  auto fam = nl_family(2, 64);
  const std::size_t n = fam.members.size();
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_FALSE(fam.embeds[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (fam.embeds[i][j]) EXPECT_FALSE(fam.embeds[j][i]);
      for (std::size_t k = 0; k < n; ++k)
        if (fam.embeds[i][j] && fam.embeds[j][k]) EXPECT_TRUE(fam.embeds[i][k]);
    }
  }
}

TEST(BasisChange, UnitriangularFamilies) {
  for (int g = 2; g <= 4; ++g) {
    auto fam = nl_family(g, 64);
    auto bc = nl_basis_change(fam);
    const std::size_t n = fam.members.size();
    EXPECT_EQ(bc.determinant, 1);
    EXPECT_EQ(bc.matrix * bc.inverse, IntMatrix::identity(n));
    EXPECT_EQ(bc.inverse * bc.matrix, IntMatrix::identity(n));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(bc.matrix(i, i), 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_GE(bc.matrix(i, j), 0);
        if (bc.matrix(i, j) != 0) EXPECT_TRUE(fam.embeds[i][j]);
        if (j < i) EXPECT_EQ(bc.matrix(i, j), 0);
      }
    }
  }
}

TEST(BasisChange, SingleMember) {
  auto fam = make_family(2, {hyperbolic_plane()});
  auto bc = nl_basis_change(fam);
  EXPECT_EQ(bc.matrix, IntMatrix::identity(1));
}

TEST(BasisChange, IncompleteFamily) {
  auto fam = make_family(2, {direct_sum(rank_one(2), rank_one(-2))});
  EXPECT_EQ(code_of([&] { nl_basis_change(fam); }), ErrorCode::IncompleteFamily);
}

TEST(SpecialCycles, LambdaPrefactor) {
  EXPECT_EQ(special_cycle_expand(3, 3).lambda_power, 0);
  EXPECT_EQ(special_cycle_expand(2, 3).lambda_power, 1);
  EXPECT_EQ(special_cycle_expand(2, 3).family_rank, 2);
  EXPECT_EQ(special_cycle_expand(0, 2).lambda_power, 2);
  EXPECT_EQ(code_of([] { special_cycle_expand(3, 2); }), ErrorCode::InvalidParameter);
}
