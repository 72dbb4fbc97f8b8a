#include "d43/g2crystal.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace d43;

namespace {

CrystalElement el(long a, long b, long c, long d, long e, long f) { return {{a, b, c, d, e, f}}; }

const LevelCtx kNN = NonNegativeUnbounded{};

long string_up(int i, CrystalElement b, const LevelCtx& ctx) {
  long n = 0;
  while (auto next = g2_e(i, b, ctx)) {
    b = *next;
    ++n;
  }
  return n;
}

long string_down(int i, CrystalElement b, const LevelCtx& ctx) {
  long n = 0;
  while (auto next = g2_f(i, b, ctx)) {
    b = *next;
    ++n;
  }
  return n;
}

}  // namespace

TEST(G2Crystal, ExampleArrows) {
  EXPECT_EQ(f1(el(1, 0, 0, 0, 0, 0), kNN), el(0, 1, 0, 0, 0, 0));
  EXPECT_EQ(f2(el(0, 1, 0, 0, 0, 0), kNN), el(0, 0, 2, 0, 0, 0));
  EXPECT_EQ(f1(el(0, 0, 2, 0, 0, 0), kNN), el(0, 0, 1, 1, 0, 0));
  EXPECT_FALSE(e2(el(0, 0, 0, 2, 0, 0), kNN).has_value());
  EXPECT_FALSE(f1(el(0, 0, 0, 0, 0, 1), Finite{1}).has_value());
}

TEST(G2Crystal, StringLengthExamples) {
  EXPECT_EQ(eps1(el(0, 0, 0, 0, 0, 1)), 1);
  EXPECT_EQ(phi2(el(0, 1, 0, 0, 0, 0)), 1);
  for (long j = 0; j <= 4; ++j) {
    EXPECT_EQ(eps1(el(j, 0, 0, 0, 0, 0)), 0);
    EXPECT_EQ(eps2(el(j, 0, 0, 0, 0, 0)), 0);
    EXPECT_EQ(phi1(el(j, 0, 0, 0, 0, 0)), j);
  }
}

TEST(G2Crystal, EnumerateSizes) {
  EXPECT_EQ(enumerate_g2(0), std::vector<CrystalElement>{el(0, 0, 0, 0, 0, 0)});
  const auto b1 = enumerate_g2(1);
  const std::set<CrystalElement> want{el(1, 0, 0, 0, 0, 0), el(0, 1, 0, 0, 0, 0), el(0, 0, 2, 0, 0, 0),
                                      el(0, 0, 1, 1, 0, 0), el(0, 0, 0, 2, 0, 0), el(0, 0, 0, 0, 1, 0),
                                      el(0, 0, 0, 0, 0, 1)};
  EXPECT_EQ(std::set<CrystalElement>(b1.begin(), b1.end()), want);
  EXPECT_EQ(b1.size(), 7u);
  EXPECT_EQ(enumerate_g2(2).size(), 27u);
  EXPECT_EQ(enumerate_g2(3).size(), 77u);
  EXPECT_TRUE(std::is_sorted(b1.begin(), b1.end()));
}

TEST(G2Crystal, BruteForceEnumeration) {
  for (long j = 0; j <= 4; ++j) {
    std::vector<CrystalElement> brute;
    for (long a = 0; a <= j; ++a)
      for (long b = 0; b <= j; ++b)
        for (long c = 0; c <= 2 * j; ++c)
          for (long d = 0; d <= 2 * j; ++d)
            for (long e = 0; e <= j; ++e)
              for (long f = 0; f <= j; ++f) {
                if ((c + d) % 2 != 0) continue;
                if (a + b + (c + d) / 2 + e + f == j) brute.push_back(el(a, b, c, d, e, f));
              }
    EXPECT_EQ(enumerate_g2(j), brute) << j;
  }
}

TEST(G2Crystal, InverseAndStrings) {
  for (long j = 0; j <= 5; ++j) {
    const LevelCtx ctx = Finite{j};
    const auto all = enumerate_g2(j);
    const std::set<CrystalElement> members(all.begin(), all.end());
    for (const auto& b : all)
      for (int i = 1; i <= 2; ++i) {
        if (auto y = g2_f(i, b, ctx)) {
          EXPECT_TRUE(members.count(*y)) << b.str();
          EXPECT_EQ(g2_e(i, *y, ctx), b) << b.str();
          EXPECT_EQ(g2_phi(i, b) - g2_eps(i, b) - 2, g2_phi(i, *y) - g2_eps(i, *y));
        }
        if (auto y = g2_e(i, b, ctx)) EXPECT_EQ(g2_f(i, *y, ctx), b) << b.str();
        EXPECT_EQ(g2_eps(i, b), string_up(i, b, ctx)) << i << " " << b.str();
        EXPECT_EQ(g2_phi(i, b), string_down(i, b, ctx)) << i << " " << b.str();
      }
  }
}

TEST(G2Crystal, UniqueSource) {
  for (long j = 1; j <= 4; ++j) {
    std::size_t sources = 0;
    for (const auto& b : enumerate_g2(j))
      if (eps1(b) == 0 && eps2(b) == 0) {
        ++sources;
        EXPECT_EQ(b, el(j, 0, 0, 0, 0, 0));
      }
    EXPECT_EQ(sources, 1u);
  }
}

TEST(G2Crystal, Validity) {
  EXPECT_FALSE(parity_ok(el(0, 0, 1, 0, 0, 0)));
  EXPECT_EQ(s(el(1, 1, 2, 2, 1, 1)), 6);
  EXPECT_TRUE(is_valid(el(0, 0, 1, 1, 0, 0), Finite{1}));
  EXPECT_FALSE(is_valid(el(1, 1, 0, 0, 0, 0), Finite{1}));
  EXPECT_FALSE(is_valid(el(-1, 0, 0, 0, 0, 0), kNN));
  EXPECT_TRUE(is_valid(el(-1, 0, 0, 0, 0, 0), FreeIntegral{}));
  EXPECT_THROW(require_valid(el(1, 1, 0, 0, 0, 0), Finite{1}), std::invalid_argument);
  EXPECT_THROW(s(el(0, 0, 1, 0, 0, 0)), std::invalid_argument);
}

TEST(Tableau, RoundTrip) {
  for (long j = 0; j <= 4; ++j)
    for (const auto& b : enumerate_g2(j)) {
      const Tableau t = to_tableau(b);
      EXPECT_EQ(t.length(), j);
      EXPECT_LE(t.w[3], 1);
      EXPECT_EQ(from_tableau(t), b);
    }
}

TEST(Tableau, Render) {
  const auto b = el(1, 2, 3, 1, 0, 2);
  const Tableau t = to_tableau(b);
  EXPECT_EQ(t.w, (std::array<long, 7>{1, 2, 1, 1, 0, 0, 2}));
  EXPECT_EQ(t.render(true), "1 2 2 3 0 -1 -1");
  EXPECT_EQ(t.render(), "1 2 2 3 0 1̄ 1̄");
  EXPECT_EQ(to_tableau(el(0, 0, 0, 0, 0, 0)).render(true), "");
  EXPECT_EQ(to_tableau(el(0, 0, 1, 1, 0, 0)).render(true), "0");
  EXPECT_EQ(to_tableau(el(0, 0, 0, 2, 1, 0)).render(true), "-3 -2");
}
