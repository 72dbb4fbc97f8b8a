#include "d43/rmatrix.hpp"

#include <gtest/gtest.h>

using namespace d43;

namespace {

QRat qp(long k) { return QRat::q_power(k); }

const Rep8& rep() {
  static const Rep8 r = build_v1();
  return r;
}

const RBuild& built() {
  static const RBuild b = build_R(rep());
  return b;
}

LPoly2 Z() { return LPoly2::x(); }

}  // namespace

TEST(Components, Dimensions) {
  const auto& c = built().components;
  ASSERT_EQ(c.size(), 7u);
  const std::array<std::size_t, 7> dims{27, 14, 7, 7, 7, 1, 1};
  std::size_t total = 0;
  for (std::size_t k = 0; k < 7; ++k) {
    EXPECT_EQ(c[k].basis.size(), dims[k]) << c[k].name;
    total += c[k].basis.size();
  }
  EXPECT_EQ(total, 64u);
}

TEST(Components, TrivialComponentIsPhiPhi) {
  const auto& c = built().components[5];
  ASSERT_EQ(c.basis.size(), 1u);
  for (std::size_t k = 0; k < kTensorDim; ++k)
    EXPECT_EQ(c.basis[0][k], k == tensor_index(VPHI, VPHI) ? QRat(1) : QRat(0));
}

TEST(Components, CopiesShareWordsAndAction) {
  const auto& c = built().components;
  EXPECT_EQ(c[2].words, c[3].words);
  EXPECT_EQ(c[2].words, c[4].words);
  EXPECT_EQ(c[3].action, c[2].action);
  EXPECT_EQ(c[4].action, c[2].action);
  EXPECT_EQ(c[6].action, c[5].action);
  EXPECT_TRUE(c[0].words.front().empty());
}

TEST(Components, BasisInverse) {
  EXPECT_EQ(built().basis_inverse * built().basis, Matrix<QRat>::identity(kTensorDim));
}

TEST(Coefficients, ClosedForms) {
  const auto c = proposition_coefficients();
  const LPoly2 one(1);
  EXPECT_EQ(c.aLa1[0][0], (QRat(1) - qp(6)) / (QRat(1) + qp(2)) * Z() * (one - qp(12) * Z() * Z()));
  EXPECT_EQ(c.aLa1[1][1], c.aLa1[0][0]);
  EXPECT_TRUE(c.aLa1[0][1].eval_x(1).is_zero());
  EXPECT_EQ(c.a0[1][1], z_reverse(c.a0[0][0], 4));
  EXPECT_EQ(c.aLa1[2][0], (QRat(1) + qp(2)).pow(2) * (QRat(1) + qp(8)) * c.aLa1[0][2]);
  EXPECT_EQ(c.a2La1, phi_polynomial());
}

TEST(Coefficients, MatchLoweringImages) {
  for (const auto& c : verify_coefficients_by_lowering(rep(), proposition_coefficients()))
    EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(Coefficients, MutationBreaksLoweringCheck) {
  auto c = proposition_coefficients();
  c.a0[0][1] = c.a0[0][1] * QRat(3);
  bool failed = false;
  for (const auto& r : verify_coefficients_by_lowering(rep(), c)) failed = failed || !r.pass;
  EXPECT_TRUE(failed);
}

TEST(RMatrix, PolynomialWeightPreserving) {
  const auto& R = built().R;
  EXPECT_EQ(R.degree(), 4);
  for (const auto& m : R.coeff)
    for (std::size_t r = 0; r < kTensorDim; ++r)
      for (const auto& [c, v] : m.row(r)) {
        const auto wr = rep().weight[r / 8] + rep().weight[r % 8];
        const auto wc = rep().weight[c / 8] + rep().weight[c % 8];
        EXPECT_EQ(wr, wc);
      }
}

TEST(RMatrix, ProportionalToIdentityAtOne) {
  const auto R1 = built().R.eval(QRat(1));
  const QRat s = phi_polynomial().eval_x(1);
  EXPECT_EQ(R1, s * Matrix<QRat>::identity(kTensorDim));
}

TEST(Intertwiner, AllGenerators) {
  const auto checks = verify_intertwiner(rep(), built().R);
  ASSERT_EQ(checks.size(), 9u);
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(Intertwiner, MutatedA13FailsE0) {
  auto c = proposition_coefficients();
  c.aLa1[0][2] = c.aLa1[0][2] * QRat(2);
  const auto bad = rebuild_R(built(), c);
  const auto checks = verify_intertwiner(rep(), bad.R);
  EXPECT_FALSE(checks[0].pass);
  EXPECT_EQ(checks[0].name, "e0");
  for (std::size_t k = 2; k < checks.size(); ++k) EXPECT_TRUE(checks[k].pass) << checks[k].name;
}

TEST(Projections, Properties) {
  for (const auto& c : verify_projections(rep(), built())) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(Determinants, ClosedForms) {
  for (const auto& c : verify_determinants(proposition_coefficients())) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(Determinants, Zeros) {
  const auto c = proposition_coefficients();
  const auto& A = c.aLa1;
  const LPoly2 d3 = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                    A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                    A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
  EXPECT_TRUE(d3.eval_x(qp(2)).is_zero());
  const LPoly2 d2 = c.a0[0][0] * c.a0[1][1] - c.a0[0][1] * c.a0[1][0];
  EXPECT_TRUE(d2.eval_x(qp(6)).is_zero());
  EXPECT_FALSE(d2.eval_x(qp(4)).is_zero());
}

TEST(Determinants, MutationDetected) {
  auto c = proposition_coefficients();
  c.aLa1[2][2] = c.aLa1[2][2] + Z();
  EXPECT_FALSE(verify_determinants(c)[0].pass);
}

TEST(Unitarity, ScalarProduct) {
  const auto u = verify_unitarity(built());
  EXPECT_TRUE(u.pass) << u.detail;
}

TEST(Vacuum, EigenvalueIsPhi) {
  const LPoly2 phi = vacuum_eigenvalue(built().R);
  const LPoly2 one(1);
  EXPECT_EQ(phi, (one - qp(2) * Z()) * (one - qp(6) * Z()) * (one + qp(4) * Z() + qp(8) * Z() * Z()));
  EXPECT_EQ(phi.eval_x(0), QRat(1));
  EXPECT_FALSE(phi.eval_x(qp(2)).is_zero());
  EXPECT_TRUE(phi_nonvanishing(phi, 10));
  EXPECT_FALSE(phi_nonvanishing(Z() - qp(4), 10));
}

TEST(YangBaxter, FixedSamples) {
  const auto s = ybe_samples(2, 0);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].q, 2);
  EXPECT_EQ(s[1].q, mpq_class(3, 2));
  EXPECT_EQ(s[1].z, 11);
  const auto r = verify_yang_baxter(built().R, s);
  EXPECT_TRUE(r.pass) << r.residual_nonzeros;
  EXPECT_EQ(r.checked, 2u);
}

TEST(YangBaxter, RandomSamples) {
  const auto s = ybe_samples(6, 42);
  EXPECT_EQ(s.size(), 6u);
  for (const auto& p : s) {
    EXPECT_NE(p.q, 1);
    EXPECT_NE(p.x, p.y);
  }
  EXPECT_TRUE(verify_yang_baxter(built().R, s, 2).pass);
  EXPECT_EQ(ybe_samples(6, 42)[4].x, s[4].x);
}

TEST(YangBaxter, DegeneratePoint) {
  EXPECT_TRUE(verify_yang_baxter(built().R, {{2, 3, 3, 3}}).pass);
}

TEST(YangBaxter, MutatedCoefficientFails) {
  auto c = proposition_coefficients();
  c.a0[1][0] = c.a0[1][0] * QRat(2);
  const auto bad = rebuild_R(built(), c);
  const auto r = verify_yang_baxter(bad.R, ybe_samples(2, 0));
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.first_failure.has_value());
  EXPECT_GT(r.residual_nonzeros, 0u);
}

TEST(YangBaxter, Symbolic) {
  const auto r = verify_yang_baxter_symbolic(built().R);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.checked, 81u);
}

TEST(YangBaxter, SymbolicDetectsMutation) {
  auto c = proposition_coefficients();
  c.a0[1][0] = c.a0[1][0] * QRat(2);
  EXPECT_FALSE(verify_yang_baxter_symbolic(rebuild_R(built(), c).R).pass);
}
