#include "hkt/error.hpp"
#include "hkt/moduli.hpp"

#include <gtest/gtest.h>

using namespace hkt;

TEST(Families, RecordsMatchLattices) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& f : builtin_families(n)) {
      EXPECT_EQ(static_cast<int>(f.bb_lattice.rank()), f.b2) << f.name;
      EXPECT_EQ(f.moduli_dim(), f.b2 - 3);
      Signature s = signature(f.bb_lattice);
      EXPECT_EQ(s.positive, 3u);
      EXPECT_EQ(static_cast<int>(s.negative), f.b2 - 3);
      EXPECT_EQ(f.fiber_dim, 2 * f.n);
    }
}

TEST(Families, K3Hilbert) {
  auto f = moduli_family(FamilyKind::K3n, 2);
  EXPECT_EQ(f.b2, 23);
  EXPECT_EQ(f.moduli_dim(), 20);
  EXPECT_EQ(*f.fujiki, 3);
  EXPECT_EQ(*f.euler_characteristic, 324);
  EXPECT_EQ(*moduli_family(FamilyKind::K3n, 3).euler_characteristic, 3200);
  EXPECT_EQ(*moduli_family(FamilyKind::K3n, 1).euler_characteristic, 24);
}

TEST(Families, Kummer) {
  auto f = moduli_family(FamilyKind::Kummer, 2);
  EXPECT_EQ(f.b2, 7);
  EXPECT_EQ(f.moduli_dim(), 4);
  EXPECT_EQ(*f.euler_characteristic, 108);
}

TEST(Families, OGrady) {
  auto ten = moduli_family(FamilyKind::OGDim10);
  EXPECT_EQ(ten.b2, 24);
  EXPECT_EQ(signature(ten.bb_lattice), (Signature{3, 21}));
  EXPECT_FALSE(ten.canonical_lattice);
  EXPECT_FALSE(ten.fujiki.has_value());
  auto six = moduli_family(FamilyKind::OGDim6);
  EXPECT_EQ(six.b2, 8);
  EXPECT_EQ(signature(six.bb_lattice), (Signature{3, 5}));
}

TEST(Families, InvalidN) {
  EXPECT_THROW(builtin_families(0), Error);
  EXPECT_THROW(moduli_family(FamilyKind::Kummer, 0), Error);
  EXPECT_THROW(parse_family_kind("k3"), Error);
}

TEST(Fujiki, ClosedForms) {
  Integer expected[] = {1, 3, 15, 105, 945};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(fujiki_k3n(n), expected[n - 1]);
    EXPECT_EQ(fujiki_kummer(n), expected[n - 1] * (n + 1));
  }
}

TEST(Hypotheses, MainTheorem) {
  for (int n = 1; n <= 6; ++n) {
    auto rep = hypothesis_report(moduli_family(FamilyKind::K3n, n));
    const auto* c = rep.find("Thm 4.3.2");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->verdict, n <= 2) << n;
    auto kum = hypothesis_report(moduli_family(FamilyKind::Kummer, n));
    EXPECT_FALSE(kum.find("Thm 4.3.2")->verdict);
    EXPECT_EQ(kum.find("Thm 4.3.2")->instance, std::to_string(n) + " < 0.5");
  }
  EXPECT_EQ(hypothesis_report(moduli_family(FamilyKind::K3n, 2)).find("Thm 4.3.2")->instance, "2 < 2.5");
}

TEST(Hypotheses, OptionalChecksSkipped) {
  auto rep = hypothesis_report(moduli_family(FamilyKind::K3n, 2));
  EXPECT_EQ(rep.find("Prop 4.1.2"), nullptr);
  EXPECT_EQ(rep.find("Thm 8.2.1"), nullptr);
  EXPECT_NE(rep.find("Thm 8.1.1"), nullptr);
}

TEST(Hypotheses, ParameterChecks) {
  auto k3 = moduli_family(FamilyKind::K3n, 2);
  HypothesisParams p;
  p.codim = 4;
  p.b_list = std::vector<int>{1, 1, 1, 1, 0, 0};
  p.r = 20;
  auto rep = hypothesis_report(k3, p);
  EXPECT_TRUE(rep.find("Thm 8.2.1")->verdict);
  EXPECT_TRUE(rep.find("Thm 8.3.1")->verdict);
  EXPECT_TRUE(rep.find("Prop 9.2.1")->verdict);
  p.codim = 5;
  p.b_list = std::vector<int>{0, 0, 0, 0, 1};
  p.r = 21;
  rep = hypothesis_report(k3, p);
  EXPECT_FALSE(rep.find("Thm 8.2.1")->verdict);
  EXPECT_FALSE(rep.find("Thm 8.3.1")->verdict);
  EXPECT_FALSE(rep.find("Prop 9.2.1")->verdict);
  // Kummer: b = 4 >= 3, (7 - 3)/4 = 1 so every b_j must vanish.
  HypothesisParams q;
  q.b_list = std::vector<int>{0, 0, 0, 0};
  EXPECT_TRUE(hypothesis_report(moduli_family(FamilyKind::Kummer, 2), q).find("Thm 8.3.1")->verdict);
}

TEST(Hypotheses, MonotoneInB2) {
  // Raising b2 never turns an applicable verdict off: compare Kummer (7),
  // OG6 (8), K3^[n] (23) and OG10 (24) at equal parameters.
  std::vector<ModuliFamily> fams{moduli_family(FamilyKind::Kummer, 1), moduli_family(FamilyKind::OGDim6),
                                 moduli_family(FamilyKind::K3n, 1), moduli_family(FamilyKind::OGDim10)};
  for (int codim = 0; codim <= 6; ++codim)
    for (int rs = 1; rs <= 20; ++rs) {
      HypothesisParams p;
      p.codim = codim;
      p.rank_sigma = rs;
      bool prev8 = false, prev4 = false;
      for (auto f : fams) {
        auto rep = hypothesis_report(f, p);
        bool v8 = rep.find("Thm 8.2.1")->verdict, v4 = rep.find("Prop 4.1.2")->verdict;
        EXPECT_TRUE(!prev8 || v8);
        EXPECT_TRUE(!prev4 || v4);
        prev8 = v8;
        prev4 = v4;
      }
    }
}
