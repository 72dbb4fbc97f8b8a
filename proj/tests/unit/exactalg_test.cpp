#include "d43/exactalg/matrix.hpp"
#include "d43/exactalg/sparse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace d43;

namespace {

QRat q() { return QRat::q_power(1); }

QRat random_qrat(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-4, 4), d(0, 3);
  auto poly = [&] {
    std::vector<mpz_class> v;
    for (long k = 0, n = d(rng); k <= n; ++k) v.emplace_back(c(rng));
    return ZPoly(v);
  };
  ZPoly den = poly();
  while (den.is_zero()) den = poly();
  return {poly(), den};
}

}  // namespace

TEST(QInt, SmallValues) {
  EXPECT_EQ(q_int(1, 0), QRat(1));
  EXPECT_EQ(q_int(2, 0), QRat(ZPoly{1, 0, 1}, ZPoly{0, 1}));
  EXPECT_EQ(q_int(2, 0).str(), "(q^2+1)/(q)");
  EXPECT_EQ(q_int(2, 2), QRat::q_power(3) + QRat::q_power(-3));
  EXPECT_EQ(q_int(0, 1), QRat(0));
  EXPECT_EQ(q_int(2, 1), q_int(2, 0));
}

TEST(QInt, BadNodeThrows) {
  EXPECT_THROW(q_int(2, 3), std::invalid_argument);
  EXPECT_THROW(q_factorial(-1, 0), std::invalid_argument);
}

TEST(QInt, BarInvariant) {
  for (int i = 0; i < 3; ++i)
    for (long m = 1; m <= 8; ++m) EXPECT_EQ(q_int(m, i).bar(), q_int(m, i)) << m << " " << i;
}

TEST(QInt, DefiningRatio) {
  for (int i = 0; i < 3; ++i) {
    const QRat qi = q_node(i);
    for (long m = 1; m <= 6; ++m) EXPECT_EQ(q_int(m, i), (qi.pow(m) - qi.pow(-m)) / (qi - qi.inverse()));
  }
}

TEST(QFactorial, SmallValues) {
  EXPECT_EQ(q_factorial(0, 0), QRat(1));
  EXPECT_EQ(q_factorial(2, 0), q() + q().inverse());
  EXPECT_EQ(q_factorial(3, 0), (q() + q().inverse()) * (q() * q() + 1 + q().pow(-2)));
}

TEST(QRat, Canonical) {
  const QRat a(ZPoly{2, 2}, ZPoly{4});
  const QRat b(ZPoly{1, 1}, ZPoly{2});
  EXPECT_EQ(a, b);
  const QRat c(ZPoly{-1}, ZPoly{0, -1});
  EXPECT_EQ(c, q().inverse());
  EXPECT_THROW(QRat(ZPoly{1}, ZPoly{}), std::domain_error);
}

TEST(QRat, Eval) {
  EXPECT_EQ(q_int(2, 0).eval(2), mpq_class(5, 2));
  EXPECT_THROW(q().inverse().eval(0), std::domain_error);
}

TEST(QRat, FieldAxiomsRandomized) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, QRat(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), QRat(1));
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
  }
}

TEST(ZPoly, GcdAgreesWithPrs) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    auto poly = [&](int deg) {
      std::vector<mpz_class> v;
      for (int k = 0; k <= deg; ++k) v.emplace_back(c(rng));
      return ZPoly(v);
    };
    const ZPoly g = poly(2), a = poly(3) * g, b = poly(2) * g;
    EXPECT_EQ(ZPoly::gcd(a, b), ZPoly::gcd_prs(a, b));
    if (!g.is_zero() && !a.is_zero()) EXPECT_TRUE(ZPoly::try_divide(a, ZPoly::gcd(a, b)).has_value());
  }
}

TEST(LPoly2, Arithmetic) {
  const LPoly2 x = LPoly2::x(), y = LPoly2::y();
  const LPoly2 p = (x - q() * y) * (x + q() * y);
  EXPECT_EQ(p, x * x - q() * q() * y * y);
  EXPECT_TRUE(p.is_homogeneous(2));
  EXPECT_EQ(p.swapped(), y * y - q() * q() * x * x);
  EXPECT_EQ((x - x).size(), 0u);
  EXPECT_EQ(p.eval(2, 3, 1), mpq_class(9 - 4));
  EXPECT_EQ(x.shifted(-1, 2), y * y);
  EXPECT_EQ((x * x + 1).x_inverted().shifted(2, 0), x * x + 1);
  EXPECT_EQ((x * x + q()).eval_x(q()), q() * q() + q());
  EXPECT_THROW(y.eval_x(q()), std::invalid_argument);
}

TEST(SolveLinear, Identity) {
  const auto I = Matrix<QRat>::identity(3);
  const std::vector<QRat> b{1, q(), q_int(3, 0)};
  const auto s = solve_linear(I, b);
  ASSERT_EQ(s.kind, LinearSolution<QRat>::Kind::Unique);
  EXPECT_EQ(s.particular, b);
}

TEST(SolveLinear, ZeroSystem) {
  const Matrix<QRat> Z(2, 3);
  const auto s = solve_linear(Z, {0, 0});
  ASSERT_EQ(s.kind, LinearSolution<QRat>::Kind::Family);
  EXPECT_EQ(s.kernel.size(), 3u);
}

TEST(SolveLinear, RankOneKernel) {
  Matrix<QRat> A(2, 2);
  A(0, 0) = 1;
  A(0, 1) = q();
  A(1, 0) = q();
  A(1, 1) = q() * q();
  const auto s = solve_linear(A, {0, 0});
  ASSERT_EQ(s.kind, LinearSolution<QRat>::Kind::Family);
  ASSERT_EQ(s.kernel.size(), 1u);
  const auto& k = s.kernel[0];
  // proportional to (q, -1)
  EXPECT_EQ(k[0] * QRat(-1), k[1] * q());
  EXPECT_TRUE(A.apply(k)[0].is_zero());
}

TEST(SolveLinear, Inconsistent) {
  Matrix<QRat> A(2, 1);
  A(0, 0) = 1;
  A(1, 0) = 1;
  EXPECT_EQ(solve_linear(A, {1, 2}).kind, LinearSolution<QRat>::Kind::Inconsistent);
  EXPECT_THROW(solve_linear(A, {1}), std::invalid_argument);
}

TEST(SolveLinear, ReproducesRightHandSideRandomized) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<QRat> A(3, 3);
    std::vector<QRat> b(3);
    for (std::size_t r = 0; r < 3; ++r) {
      b[r] = random_qrat(rng);
      for (std::size_t c = 0; c < 3; ++c) A(r, c) = random_qrat(rng);
    }
    const auto s = solve_linear(A, b);
    if (s.kind == LinearSolution<QRat>::Kind::Inconsistent) continue;
    EXPECT_EQ(A.apply(s.particular), b);
    for (const auto& k : s.kernel)
      for (const auto& v : A.apply(k)) EXPECT_TRUE(v.is_zero());
  }
}

TEST(Matrix, InverseAndRank) {
  Matrix<QRat> A(2, 2);
  A(0, 0) = q();
  A(0, 1) = 1;
  A(1, 0) = 1;
  A(1, 1) = q_int(2, 0);
  EXPECT_EQ(inverse(A) * A, Matrix<QRat>::identity(2));
  EXPECT_EQ(rank(A), 2u);
  Matrix<QRat> S(2, 2);
  S(0, 0) = 1;
  S(0, 1) = q();
  S(1, 0) = 2;
  S(1, 1) = 2 * q();
  EXPECT_EQ(rank(S), 1u);
  EXPECT_THROW(inverse(S), std::domain_error);
}

TEST(Matrix, KronIndexing) {
  Matrix<mpq_class> a(2, 2), b(2, 2);
  a(0, 1) = 2;
  b(1, 0) = 3;
  const auto k = kron(a, b);
  EXPECT_EQ(k(0 * 2 + 1, 1 * 2 + 0), 6);
  EXPECT_EQ(k.count_nonzero(), 1u);
}

TEST(Sparse, AgreesWithDense) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> v(-2, 2);
  Matrix<mpq_class> a(4, 3), b(3, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      a(r, c) = v(rng);
      b(c, r) = v(rng);
    }
  const SparseMatrix<mpq_class> sa(a), sb(b);
  EXPECT_EQ((sa * sb).dense(), a * b);
  EXPECT_EQ((sa - sa).nonzeros(), 0u);
  EXPECT_EQ(sa.kron_identity_right(2).dense(), kron(a, Matrix<mpq_class>::identity(2)));
  EXPECT_EQ(sa.kron_identity_left(3).dense(), kron(Matrix<mpq_class>::identity(3), a));
  EXPECT_EQ(kron(sa, sb).dense(), kron(a, b));
  const std::vector<mpq_class> x{1, 2, 3};
  EXPECT_EQ(sa.apply(x), a.apply(x));
}
