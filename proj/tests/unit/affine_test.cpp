#include "d43/affine.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace d43;

namespace {

CrystalElement el(long a, long b, long c, long d, long e, long f) { return {{a, b, c, d, e, f}}; }

// The inequality systems (F1)..(F6); (Ei) swaps > for >= and <= for <.
bool raw_condition(int k, const ZVec& z, bool raising) {
  auto le = [&](long v) { return raising ? v < 0 : v <= 0; };
  auto gt = [&](long v) { return raising ? v >= 0 : v > 0; };
  const long z1 = z.z1, z2 = z.z2, z3 = z.z3, z4 = z.z4;
  switch (k) {
    case 1: return le(z1 + z2 + z3 + 3 * z4) && le(z1 + z2 + 3 * z4) && le(z1 + z2) && le(z1);
    case 2: return le(z1 + z2 + z3 + 3 * z4) && le(z2 + 3 * z4) && le(z2) && gt(z1);
    case 3: return le(z1 + z3 + 3 * z4) && le(z3 + 3 * z4) && le(z4) && gt(z2) && gt(z1 + z2);
    case 4: return gt(z1 + z2 + 3 * z4) && gt(z2 + 3 * z4) && gt(z4) && le(z3) && le(z1 + z3);
    case 5: return gt(z1 + z2 + z3 + 3 * z4) && gt(z3 + 3 * z4) && gt(z3) && le(z1);
    case 6: return gt(z1 + z2 + z3 + 3 * z4) && gt(z1 + z3 + 3 * z4) && gt(z1 + z3) && gt(z1);
  }
  return false;
}

long count_steps(bool down, int i, CrystalElement b, const LevelCtx& ctx) {
  long n = 0;
  while (auto next = down ? f(i, b, ctx) : e(i, b, ctx)) {
    b = *next;
    ++n;
  }
  return n;
}

}  // namespace

TEST(Affine, ZVecAndAList) {
  const auto z = zvec(el(1, 2, 3, 5, 7, 11));
  EXPECT_EQ(z.z1, 10);
  EXPECT_EQ(z.z2, 2);
  EXPECT_EQ(z.z3, 1);
  EXPECT_EQ(z.z4, 1);
  EXPECT_EQ(alist(z), (AList{0, 10, 12, 15, 16, 26}));
  EXPECT_EQ(alist(el(0, 1, 0, 0, 0, 0)), (AList{0, 0, 0, 0, -1, -1}));
  EXPECT_EQ(alist(el(0, 0, 0, 2, 0, 0)), (AList{0, 0, -2, 1, 1, 1}));
}

TEST(Affine, CaseExamples) {
  EXPECT_EQ(f_case(el(0, 1, 0, 0, 0, 0)), 1);
  EXPECT_EQ(f_case(el(0, 0, 0, 2, 0, 0)), 4);
  EXPECT_EQ(e_case(el(0, 0, 0, 2, 0, 0)), 6);
  EXPECT_EQ(f_case(el(0, 0, 0, 0, 1, 0)), 3);
}

TEST(Affine, CasesMatchInequalities) {
  for (long l = 1; l <= 6; ++l)
    for (const auto& b : enumerate_Bl(l)) {
      const ZVec z = zvec(b);
      int fk = 0, ek = 0;
      for (int k = 1; k <= 6; ++k) {
        if (raw_condition(k, z, false)) {
          EXPECT_EQ(fk, 0) << "two F cases for " << b.str();
          fk = k;
        }
        if (raw_condition(k, z, true)) {
          EXPECT_EQ(ek, 0) << "two E cases for " << b.str();
          ek = k;
        }
      }
      EXPECT_EQ(f_case(b), fk) << b.str();
      EXPECT_EQ(e_case(b), ek) << b.str();
    }
}

TEST(Affine, ZeroArrowExamples) {
  const LevelCtx B1 = Finite{1};
  EXPECT_EQ(f0(el(0, 0, 0, 2, 0, 0), B1), el(0, 1, 0, 0, 0, 0));
  EXPECT_EQ(f0(el(0, 0, 0, 0, 0, 1), B1), el(0, 0, 0, 0, 0, 0));
  EXPECT_FALSE(f0(el(0, 1, 0, 0, 0, 0), B1).has_value());
  EXPECT_EQ(e0(el(1, 0, 0, 0, 0, 0), B1), el(0, 0, 0, 0, 0, 0));
  EXPECT_EQ(f0(el(0, 0, 0, 0, 0, 0), B1), el(1, 0, 0, 0, 0, 0));
  EXPECT_EQ(f0(el(0, 0, 0, 0, 1, 0), B1), el(0, 0, 2, 0, 0, 0));
  EXPECT_EQ(f0(el(0, 1, 0, 0, 0, 0), NonNegativeUnbounded{}), el(1, 1, 0, 0, 0, 0));
  EXPECT_EQ(e0(el(0, 0, 0, 0, 0, 0), FreeIntegral{}), el(0, 0, 0, 0, 0, 1));
}

TEST(Affine, B1Graph) {
  using Arrow = std::tuple<int, CrystalElement, CrystalElement>;
  const auto one = el(1, 0, 0, 0, 0, 0), two = el(0, 1, 0, 0, 0, 0), three = el(0, 0, 2, 0, 0, 0),
             zero = el(0, 0, 1, 1, 0, 0), b3 = el(0, 0, 0, 2, 0, 0), b2 = el(0, 0, 0, 0, 1, 0),
             b1 = el(0, 0, 0, 0, 0, 1), vac = el(0, 0, 0, 0, 0, 0);
  const std::set<Arrow> want{{1, one, two}, {1, three, zero}, {1, zero, b3}, {1, b2, b1}, {2, two, three},
                             {2, b3, b2},   {0, b1, vac},     {0, vac, one}, {0, b3, two}, {0, b2, three}};
  std::set<Arrow> got;
  for (const auto& b : enumerate_Bl(1))
    for (int i = 0; i < 3; ++i)
      if (auto y = f(i, b, Finite{1})) got.emplace(i, b, *y);
  EXPECT_EQ(got, want);
}

TEST(Affine, EpsPhiExamples) {
  const LevelCtx B1 = Finite{1};
  EXPECT_EQ(phi0(el(0, 0, 0, 0, 0, 0), B1), 1);
  EXPECT_EQ(phi0(el(0, 0, 0, 2, 0, 0), B1), 1);
  EXPECT_EQ(eps0(el(0, 0, 0, 2, 0, 0), B1), 0);
  EXPECT_EQ(eps0(el(0, 0, 0, 0, 0, 0), FreeIntegral{}), 0);
  EXPECT_EQ(phi0(el(0, 0, 0, 0, 0, 0), FreeIntegral{}), 0);
  EXPECT_THROW(eps0(el(0, 0, 0, 0, 0, 0), NonNegativeUnbounded{}), std::domain_error);
}

TEST(Affine, StringLengths) {
  for (long l = 1; l <= 5; ++l) {
    const LevelCtx ctx = Finite{l};
    for (const auto& b : enumerate_Bl(l))
      for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(eps(i, b, ctx), count_steps(false, i, b, ctx)) << i << " " << b.str();
        EXPECT_EQ(phi(i, b, ctx), count_steps(true, i, b, ctx)) << i << " " << b.str();
      }
  }
}

TEST(Affine, InverseProperty) {
  for (long l = 1; l <= 5; ++l) {
    const LevelCtx ctx = Finite{l};
    const auto all = enumerate_Bl(l);
    const std::set<CrystalElement> members(all.begin(), all.end());
    for (const auto& b : all)
      for (int i = 0; i < 3; ++i) {
        if (auto y = f(i, b, ctx)) {
          EXPECT_TRUE(members.count(*y));
          EXPECT_EQ(e(i, *y, ctx), b);
        }
        if (auto y = e(i, b, ctx)) EXPECT_EQ(f(i, *y, ctx), b);
      }
  }
}

TEST(Affine, FreeIntegralInverse) {
  const LevelCtx ctx = FreeIntegral{};
  for (long a = -2; a <= 2; ++a)
    for (long c = -3; c <= 3; ++c)
      for (long d = -3; d <= 3; d += 2) {
        const auto b = el(a, -a, c, c % 2 == 0 ? d + 1 : d, 1, -2);
        for (int i = 0; i < 3; ++i) {
          auto y = f(i, b, ctx);
          ASSERT_TRUE(y.has_value());
          EXPECT_EQ(e(i, *y, ctx), b);
          EXPECT_EQ(phi(i, b, ctx) - eps(i, b, ctx) - 2, phi(i, *y, ctx) - eps(i, *y, ctx));
        }
      }
}

TEST(Affine, F1E6Persistence) {
  for (long l = 1; l <= 5; ++l) {
    const LevelCtx ctx = Finite{l};
    for (const auto& b : enumerate_Bl(l)) {
      if (f_case(b) == 1)
        if (auto y = f0(b, ctx)) EXPECT_EQ(f_case(*y), 1) << b.str();
      if (e_case(b) == 6)
        if (auto y = e0(b, ctx)) EXPECT_EQ(e_case(*y), 6) << b.str();
    }
  }
}

TEST(Affine, AbsenceCharacterization) {
  for (long l = 1; l <= 5; ++l) {
    const LevelCtx ctx = Finite{l};
    for (const auto& b : enumerate_Bl(l)) {
      if (!f0(b, ctx)) {
        EXPECT_EQ(s(b), l);
        EXPECT_EQ(f_case(b), 1);
      }
      if (!e0(b, ctx)) {
        EXPECT_EQ(s(b), l);
        EXPECT_EQ(e_case(b), 6);
      }
    }
  }
}

TEST(Affine, Weights) {
  const LevelCtx B1 = Finite{1};
  EXPECT_EQ(weight(el(1, 0, 0, 0, 0, 0), B1), (ClWeight{-2, 1, 0}));
  EXPECT_EQ(weight(el(0, 0, 0, 0, 0, 0), B1), (ClWeight{0, 0, 0}));
  EXPECT_EQ(weight(el(0, 0, 0, 0, 0, 1), B1), (ClWeight{2, -1, 0}));
  for (long l = 1; l <= 4; ++l)
    for (const auto& b : enumerate_Bl(l)) {
      EXPECT_EQ(weight(b, Finite{l}).level(), 0) << b.str();
      EXPECT_EQ(weight(b, Finite{l}), phi_weight(b, Finite{l}) - eps_weight(b, Finite{l}));
    }
}

TEST(Affine, Enumeration) {
  EXPECT_EQ(enumerate_Bl(1).size(), 8u);
  EXPECT_EQ(enumerate_Bl(2).size(), 35u);
  EXPECT_EQ(enumerate_Bl(3).size(), 112u);
  for (long l = 1; l <= 7; ++l) {
    const auto all = enumerate_Bl(l);
    EXPECT_EQ(static_cast<long>(all.size()), bl_cardinality(l));
    EXPECT_EQ(std::set<CrystalElement>(all.begin(), all.end()).size(), all.size());
  }
  EXPECT_EQ(bl_cardinality(0), 1);
}

TEST(Affine, DimensionIdentity) {
  for (const auto& row : dimension_identity(8)) EXPECT_EQ(row.enumerated, row.series) << row.l;
}

TEST(Affine, Involution) {
  EXPECT_EQ(involution(el(1, 0, 0, 0, 0, 0)), el(0, 0, 0, 0, 0, 1));
  EXPECT_EQ(involution(el(0, 1, 2, 0, 0, 0)), el(0, 0, 0, 2, 1, 0));
  for (long l = 1; l <= 4; ++l) {
    const LevelCtx ctx = Finite{l};
    for (const auto& b : enumerate_Bl(l)) {
      const auto v = involution(b);
      EXPECT_EQ(involution(v), b);
      for (int i = 0; i < 3; ++i) {
        auto eb = e(i, b, ctx);
        auto fv = f(i, v, ctx);
        ASSERT_EQ(eb.has_value(), fv.has_value()) << i << " " << b.str();
        if (eb) EXPECT_EQ(involution(*eb), *fv);
        auto fb = f(i, b, ctx);
        auto ev = e(i, v, ctx);
        ASSERT_EQ(fb.has_value(), ev.has_value());
        if (fb) EXPECT_EQ(involution(*fb), *ev);
      }
    }
  }
}
