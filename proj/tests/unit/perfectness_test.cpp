#include "d43/perfectness.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace d43;

namespace {

CrystalElement el(long a, long b, long c, long d, long e, long f) { return {{a, b, c, d, e, f}}; }

}  // namespace

TEST(Minimal, Elements) {
  EXPECT_EQ(minimal_elements(1), (std::vector<MinimalElement>{{0, 0}}));
  EXPECT_EQ(minimal_elements(3), (std::vector<MinimalElement>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(minimal_elements(6).size(), 7u);
  EXPECT_EQ((MinimalElement{1, 2}).element(), el(1, 2, 2, 2, 2, 1));
  for (long l = 1; l <= 8; ++l)
    for (const auto& m : minimal_elements(l)) {
      EXPECT_EQ(level_of(m.weight(l)), l);
      EXPECT_TRUE(m.weight(l).dominant());
    }
}

TEST(Level, Values) {
  EXPECT_EQ(level_of({1, 0, 0}), 1);
  EXPECT_EQ(level_of({0, 0, 1}), 3);
  EXPECT_EQ(level_of({0, 1, 0}), 2);
}

TEST(P1, Connected) {
  for (long l = 1; l <= 2; ++l) {
    const auto r = check_P1(l);
    EXPECT_TRUE(r.pass) << l;
    EXPECT_EQ(r.components, 1u);
    EXPECT_EQ(static_cast<long>(r.vertices), bl_cardinality(l) * bl_cardinality(l));
    EXPECT_TRUE(r.representatives.empty());
  }
}

TEST(P2, WeightTop) {
  const auto r = check_P2(1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lambda0, (ClWeight{-2, 1, 0}));
  EXPECT_EQ(r.top_multiplicity, 1u);
  for (long l = 2; l <= 5; ++l) {
    const auto p = check_P2(l);
    EXPECT_TRUE(p.pass) << l;
    EXPECT_EQ(p.top_multiplicity, 1u);
    EXPECT_EQ(p.lambda0, (ClWeight{-2 * l, l, 0}));
  }
}

TEST(P2, RootCoefficients) {
  EXPECT_EQ(root_coefficients({-2, 1, 0}, {0, 0, 0}), (std::pair<long, long>{2, 1}));
  EXPECT_EQ(root_coefficients({-2, 1, 0}, {-2, 1, 0}), (std::pair<long, long>{0, 0}));
  EXPECT_EQ(root_coefficients({-2, 1, 0}, {2, -1, 0}), (std::pair<long, long>{4, 2}));
  EXPECT_FALSE(root_coefficients({-2, 1, 0}, {1, 0, 0}).has_value());
}

TEST(P45, MinimalSets) {
  const auto r1 = check_P4_P5(1);
  EXPECT_TRUE(r1.pass);
  EXPECT_EQ(r1.minimal, std::vector<CrystalElement>{el(0, 0, 0, 0, 0, 0)});
  const auto r3 = check_P4_P5(3);
  EXPECT_TRUE(r3.pass);
  const std::set<CrystalElement> got(r3.minimal.begin(), r3.minimal.end());
  EXPECT_EQ(got, (std::set<CrystalElement>{el(0, 0, 0, 0, 0, 0), el(1, 0, 0, 0, 0, 1), el(0, 1, 1, 1, 1, 0)}));
  const LevelCtx B3 = Finite{3};
  EXPECT_EQ(eps_weight(el(1, 0, 0, 0, 0, 1), B3), (ClWeight{1, 1, 0}));
  EXPECT_EQ(eps_weight(el(0, 1, 1, 1, 1, 0), B3), (ClWeight{0, 0, 1}));
  EXPECT_EQ(phi_weight(el(0, 0, 0, 0, 0, 0), B3), (ClWeight{3, 0, 0}));
  for (long l = 4; l <= 6; ++l) {
    const auto r = check_P4_P5(l);
    EXPECT_TRUE(r.pass) << l;
    EXPECT_EQ(r.minimal.size(), minimal_elements(l).size());
  }
}

TEST(P45, LevelBoundsBruteForce) {
  for (long l = 1; l <= 4; ++l) {
    const LevelCtx ctx = Finite{l};
    for (const auto& b : enumerate_Bl(l)) {
      EXPECT_GE(level_of(eps_weight(b, ctx)), l);
      EXPECT_EQ(level_of(eps_weight(b, ctx)), level_of(phi_weight(b, ctx)));
    }
  }
}

TEST(Psi, Values) {
  EXPECT_EQ(psi(0, 0, 0, 0), 0);
  EXPECT_EQ(psi(-1, 0, 0, 0), 1);
  EXPECT_GT(psi(0, 0, 0, 1), 0);
  EXPECT_GT(psi(0, 1, -1, 0), 0);
}

TEST(Psi, Scan) {
  const auto s6 = psi_scan(6);
  EXPECT_TRUE(s6.pass);
  EXPECT_EQ(s6.minimum, 0);
  EXPECT_EQ(s6.zeros, 1u);
  EXPECT_EQ(s6.negatives, 0u);
  EXPECT_TRUE(s6.homogeneous);
  EXPECT_TRUE(psi_scan(8).pass);
}

TEST(Psi, MatchesLevel) {
  for (long l = 1; l <= 5; ++l) EXPECT_TRUE(psi_matches_level(l)) << l;
}
