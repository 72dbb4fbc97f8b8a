#include "d43/fundrep.hpp"

#include <gtest/gtest.h>

using namespace d43;

namespace {

QRat qp(long k) { return QRat::q_power(k); }
QRat br(long m) { return q_int(m, 0); }

const Rep8& rep() {
  static const Rep8 r = build_v1();
  return r;
}

std::vector<QRat> basis(int k) {
  std::vector<QRat> v(kRepDim);
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

}  // namespace

TEST(BuildV1, TabulatedActions) {
  auto e0v1 = rep().E[0].apply(basis(V1));
  EXPECT_EQ(e0v1[VPHI], QRat(1));
  EXPECT_EQ(e0v1[V0], QRat(1) / br(2));
  std::size_t nonzero = 0;
  for (const auto& c : e0v1) nonzero += !c.is_zero();
  EXPECT_EQ(nonzero, 2u);

  EXPECT_EQ(rep().E[1].apply(basis(V0))[V3], br(2));
  for (const auto& c : rep().F[2].apply(basis(V1))) EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(rep().F[0].apply(basis(VPHI))[V1], br(3) / br(2));
}

TEST(BuildV1, EntryCounts) {
  const std::array<std::size_t, 3> expected{6, 4, 2};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(rep().E[i].count_nonzero(), expected[i]);
    EXPECT_EQ(rep().F[i].count_nonzero(), expected[i]);
  }
}

TEST(BuildV1, TDiagonalMatchesWeights) {
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < kRepDim; ++k) {
      const auto ui = static_cast<std::size_t>(i), uk = static_cast<std::size_t>(k);
      EXPECT_EQ(rep().T[ui](uk, uk), q_node(i).pow(rep().weight[uk].pair(i)));
    }
  EXPECT_EQ(rep().weight[V2], (ClWeight{-1, -1, 1}));
  EXPECT_EQ(rep().weight[V3B], (ClWeight{1, -2, 1}));
  for (const auto& w : rep().weight) EXPECT_EQ(w.level(), 0);
}

TEST(BuildV1, EntriesIntegral) {
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(integral_at_zero(rep().E[i]));
    EXPECT_TRUE(integral_at_zero(rep().F[i]));
  }
  EXPECT_FALSE(integral_at_zero(QRat(1) / QRat(2)));
  EXPECT_TRUE(integral_at_zero(QRat(1) / (QRat(1) + qp(2))));
  EXPECT_TRUE(integral_at_zero(qp(-3)));
}

TEST(Relations, AllHold) {
  const auto checks = check_defining_relations(rep());
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << " " << c.residual;
  // 3 inverse checks, 9 pairs x 4 checks, 6 ordered pairs x 2 Serre families.
  EXPECT_EQ(checks.size(), 3u + 36u + 12u);
}

TEST(Relations, SerreUsesCartanRow) {
  EXPECT_EQ(1 - cartan(1, 2), 4);
  EXPECT_EQ(1 - cartan(2, 1), 2);
  EXPECT_EQ(1 - cartan(0, 2), 1);
}

TEST(Relations, PerturbedE1Fails) {
  Rep8 bad = rep();
  bad.E[1](V1, V2) += 1;
  bool ef_failed = false;
  for (const auto& c : check_defining_relations(bad))
    if (c.name == "[e,f] 11") ef_failed = !c.pass;
  EXPECT_TRUE(ef_failed);
}

TEST(Relations, PerturbedSerreEntryFails) {
  Rep8 bad = rep();
  bad.E[2](V3B, V2B) = 2;
  EXPECT_FALSE(all_pass(check_defining_relations(bad)));
}

TEST(Polarization, NormalizationsAndAdjointness) {
  const auto g = build_polarization(rep());
  EXPECT_EQ(g(V1, V1), QRat(1));
  EXPECT_EQ(g(VPHI, VPHI), qp(1) * br(3) / br(2));
  EXPECT_TRUE(g(V1, V2).is_zero());
  for (int k = 0; k < VPHI; ++k) EXPECT_TRUE(g(static_cast<std::size_t>(k), VPHI).is_zero());
  for (const auto& c : check_polarization(rep(), g)) EXPECT_TRUE(c.pass) << c.name << " " << c.residual;
  EXPECT_TRUE(integral_at_zero(g));
}

TEST(Polarization, DifferentWeightsOrthogonal) {
  const auto g = build_polarization(rep());
  for (int a = 0; a < kRepDim; ++a)
    for (int b = 0; b < kRepDim; ++b)
      if (rep().weight[static_cast<std::size_t>(a)] != rep().weight[static_cast<std::size_t>(b)])
        EXPECT_TRUE(g(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).is_zero());
}

TEST(Polarization, BrokenRepresentationRejected) {
  Rep8 bad = rep();
  bad.E[0](V3B, V2) = 2;
  EXPECT_THROW(build_polarization(bad), std::logic_error);
}

TEST(TensorRep, CoproductExamples) {
  const auto t = tensor_rep(SpectralRep{&rep(), 0}, SpectralRep{&rep(), 1});
  SpectralVec v21(kTensorDim);
  v21[tensor_index(V2, V1)] = LPoly2(1);
  const auto f2v = t.F[2].apply(v21);
  for (std::size_t k = 0; k < kTensorDim; ++k)
    EXPECT_EQ(f2v[k], k == tensor_index(V3, V1) ? LPoly2(1) : LPoly2{});

  SpectralVec v11(kTensorDim);
  v11[tensor_index(V1, V1)] = LPoly2(1);
  const auto e0v = t.E[0].apply(v11);
  // x (e0 v1) ⊗ t0^-1 v1 + y v1 ⊗ e0 v1 with t0^-1 v1 = q^2 v1.
  EXPECT_EQ(e0v[tensor_index(VPHI, V1)], LPoly2::monomial(qp(2), 1, 0));
  EXPECT_EQ(e0v[tensor_index(V0, V1)], LPoly2::monomial(qp(2) / br(2), 1, 0));
  EXPECT_EQ(e0v[tensor_index(V1, VPHI)], LPoly2::monomial(1, 0, 1));
  EXPECT_EQ(e0v[tensor_index(V1, V0)], LPoly2::monomial(QRat(1) / br(2), 0, 1));

  SpectralVec pp(kTensorDim);
  pp[tensor_index(VPHI, VPHI)] = LPoly2(1);
  for (const auto& c : t.E[1].apply(pp)) EXPECT_TRUE(c.is_zero());
  EXPECT_THROW(tensor_rep(SpectralRep{&rep(), 0}, SpectralRep{&rep(), 0}), std::invalid_argument);
}

TEST(TensorRep, ClassicalMatchesSpectralAtOne) {
  const auto s = tensor_rep(SpectralRep{&rep(), 0}, SpectralRep{&rep(), 1});
  const auto c = tensor_rep(rep());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t r = 0; r < kTensorDim; ++r) {
      ASSERT_EQ(s.E[i].row(r).size(), c.E[i].row(r).size());
      for (std::size_t k = 0; k < c.E[i].row(r).size(); ++k) {
        const auto& [col, val] = s.E[i].row(r)[k];
        EXPECT_EQ(col, c.E[i].row(r)[k].first);
        QRat sum;  // value at x = y = 1
        for (const auto& [e, cf] : val.terms()) sum += cf;
        EXPECT_EQ(sum, c.E[i].row(r)[k].second);
      }
    }
  }
}

TEST(HighestVectors, ListedForms) {
  const auto hv = highest_vectors();
  ASSERT_EQ(hv.size(), 7u);
  EXPECT_EQ(hv[0].vec[tensor_index(V1, V1)], QRat(1));
  EXPECT_EQ(hv[1].vec[tensor_index(V2, V1)], -qp(1));
  EXPECT_EQ(hv[6].vec[tensor_index(V0, V0)], -qp(4) / br(2));
  std::size_t terms = 0;
  for (const auto& c : hv[6].vec) terms += !c.is_zero();
  EXPECT_EQ(terms, 7u);
}

TEST(HighestVectors, KilledByG2Raising) {
  for (const auto& c : check_highest_vectors(rep())) EXPECT_TRUE(c.pass) << c.name << " " << c.residual;
}

TEST(HighestVectors, WeightsMatchLabels) {
  const auto hv = highest_vectors();
  EXPECT_EQ(hv[0].weight, (ClWeight{-4, 2, 0}));
  EXPECT_EQ(hv[1].weight, (ClWeight{-3, 0, 1}));
  for (std::size_t k = 2; k < 5; ++k) EXPECT_EQ(hv[k].weight, (ClWeight{-2, 1, 0}));
  EXPECT_EQ(hv[5].weight, ClWeight{});
}

TEST(Lowering, AllFourteenIdentities) {
  const auto res = verify_lowering_identities(rep());
  ASSERT_EQ(res.size(), 14u);
  for (const auto& r : res) EXPECT_TRUE(r.pass) << r.number << ": " << r.difference;
}

TEST(Lowering, SelectedValues) {
  const auto res = verify_lowering_identities(rep());
  const LPoly2 x = LPoly2::x(), y = LPoly2::y();
  const LPoly2 inv_qxy = LPoly2::monomial(qp(-1), -1, -1);
  EXPECT_EQ(*res[0].computed, inv_qxy * (x - qp(2) * y));
  EXPECT_EQ(*res[10].computed, inv_qxy * (br(3) * br(3) / br(2)));
  EXPECT_EQ(*res[12].computed, LPoly2::monomial(qp(-2) * br(3).pow(3), -3, -3) * (x * x + qp(2) * y * y));
}

TEST(Lowering, WrongExpectationDetected) {
  const auto t = tensor_rep(SpectralRep{&rep(), 0}, SpectralRep{&rep(), 1});
  const auto& id = lowering_identities()[3];
  const auto got = multiple_of_vacuum(apply_word(t, id.word, lift(highest_vectors()[4].vec)));
  ASSERT_TRUE(got.has_value());
  EXPECT_NE(*got, id.expected * QRat(2));
  EXPECT_EQ(*got, id.expected);
}
