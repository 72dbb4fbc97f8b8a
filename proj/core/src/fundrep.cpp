#include "d43/fundrep.hpp"

#include <sstream>
#include <stdexcept>

namespace d43 {

namespace {

QRat qp(long k) { return QRat::q_power(k); }
QRat qi(long m) { return q_int(m, 0); }

template <class S>
std::string first_nonzero(const Matrix<S>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!ScalarTraits<S>::is_zero(m(r, c))) {
        std::ostringstream os;
        os << "(" << r << "," << c << ") = " << m(r, c).str();
        return os.str();
      }
  return "";
}

RelationCheck residual_check(std::string name, const Matrix<QRat>& residual) {
  RelationCheck c;
  c.name = std::move(name);
  c.residual_nonzeros = residual.count_nonzero();
  c.pass = c.residual_nonzeros == 0;
  c.residual = first_nonzero(residual);
  return c;
}

Matrix<QRat> mat_pow(const Matrix<QRat>& m, long n) {
  Matrix<QRat> r = Matrix<QRat>::identity(m.rows());
  for (long k = 0; k < n; ++k) r = r * m;
  return r;
}

/// Σ_{n=0}^{l} (-1)^n X^(n) Y X^(l-n).
Matrix<QRat> serre(const Matrix<QRat>& x, const Matrix<QRat>& y, long l, int node) {
  Matrix<QRat> acc(x.rows(), x.cols());
  for (long n = 0; n <= l; ++n) {
    const QRat c = QRat(n % 2 == 0 ? 1 : -1) / (q_factorial(n, node) * q_factorial(l - n, node));
    acc += c * (mat_pow(x, n) * y * mat_pow(x, l - n));
  }
  return acc;
}

SparseMatrix<LPoly2> lift_scaled(const Matrix<QRat>& m, int x_exp, int y_exp) {
  return SparseMatrix<QRat>(m).map([&](const QRat& v) { return LPoly2::monomial(v, x_exp, y_exp); });
}

LPoly2 mono(const QRat& c, int a, int b) { return LPoly2::monomial(c, a, b); }

}  // namespace

const std::string& basis_label(int k) {
  static const std::array<std::string, kRepDim> labels{"1", "2", "3", "0", "3b", "2b", "1b", "phi"};
  if (k < 0 || k >= kRepDim) throw std::out_of_range("basis_label: index out of range");
  return labels[static_cast<std::size_t>(k)];
}

Rep8 build_v1() {
  Rep8 r;
  r.weight = {ClWeight{-2, 1, 0}, ClWeight{-1, -1, 1}, ClWeight{-1, 2, -1}, ClWeight{0, 0, 0},
              ClWeight{1, -2, 1}, ClWeight{1, 1, -1}, ClWeight{2, -1, 0},  ClWeight{0, 0, 0}};
  for (auto& m : r.E) m = Matrix<QRat>(kRepDim, kRepDim);
  for (auto& m : r.F) m = Matrix<QRat>(kRepDim, kRepDim);
  // m(target, source): the image of basis vector `source`.
  const QRat inv2 = QRat(1) / qi(2);
  const QRat r32 = qi(3) / qi(2);
  auto& E0 = r.E[0];
  E0(VPHI, V1) = 1;
  E0(V0, V1) = inv2;
  E0(V3B, V2) = 1;
  E0(V2B, V3) = 1;
  E0(V1B, V0) = 1;
  E0(V1B, VPHI) = r32;
  auto& F0 = r.F[0];
  F0(VPHI, V1B) = 1;
  F0(V0, V1B) = inv2;
  F0(V3, V2B) = 1;
  F0(V2, V3B) = 1;
  F0(V1, V0) = 1;
  F0(V1, VPHI) = r32;
  auto& E1 = r.E[1];
  E1(V1, V2) = 1;
  E1(V3, V0) = qi(2);
  E1(V0, V3B) = 1;
  E1(V2B, V1B) = 1;
  auto& F1 = r.F[1];
  F1(V1B, V2B) = 1;
  F1(V3B, V0) = qi(2);
  F1(V0, V3) = 1;
  F1(V2, V1) = 1;
  r.E[2](V2, V3) = 1;
  r.E[2](V3B, V2B) = 1;
  r.F[2](V2B, V3B) = 1;
  r.F[2](V3, V2) = 1;
  for (int i = 0; i < 3; ++i) {
    std::vector<QRat> d, di;
    for (const auto& w : r.weight) {
      d.push_back(q_node(i).pow(w.pair(i)));
      di.push_back(q_node(i).pow(-w.pair(i)));
    }
    r.T[static_cast<std::size_t>(i)] = Matrix<QRat>::diagonal(d);
    r.Tinv[static_cast<std::size_t>(i)] = Matrix<QRat>::diagonal(di);
  }
  return r;
}

bool integral_at_zero(const QRat& v) {
  if (v.is_zero()) return true;
  const ZPoly& d = v.den();
  const mpz_class& low = d.coeff(d.valuation());
  return abs(low) == 1;
}

bool integral_at_zero(const Matrix<QRat>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!integral_at_zero(m(r, c))) return false;
  return true;
}

std::vector<RelationCheck> check_defining_relations(const Rep8& rep) {
  std::vector<RelationCheck> out;
  const auto I = Matrix<QRat>::identity(kRepDim);
  for (int i = 0; i < 3; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    out.push_back(residual_check("t" + std::to_string(i) + " t" + std::to_string(i) + "^-1 = 1",
                                 rep.T[ui] * rep.Tinv[ui] - I));
    for (int j = 0; j < 3; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const std::string ij = std::to_string(i) + std::to_string(j);
      out.push_back(residual_check("t t commute " + ij, commutator(rep.T[ui], rep.T[uj])));
      const QRat s = q_node(i).pow(cartan(i, j));
      out.push_back(residual_check("t e t^-1 " + ij, rep.T[ui] * rep.E[uj] * rep.Tinv[ui] - s * rep.E[uj]));
      out.push_back(
          residual_check("t f t^-1 " + ij, rep.T[ui] * rep.F[uj] * rep.Tinv[ui] - s.inverse() * rep.F[uj]));
      Matrix<QRat> rhs(kRepDim, kRepDim);
      if (i == j) rhs = (QRat(1) / (q_node(i) - q_node(i).inverse())) * (rep.T[ui] - rep.Tinv[ui]);
      out.push_back(residual_check("[e,f] " + ij, commutator(rep.E[ui], rep.F[uj]) - rhs));
      if (i != j) {
        const long l = 1 - cartan(i, j);
        out.push_back(residual_check("serre e " + ij, serre(rep.E[ui], rep.E[uj], l, i)));
        out.push_back(residual_check("serre f " + ij, serre(rep.F[ui], rep.F[uj], l, i)));
      }
    }
  }
  return out;
}

namespace {

std::size_t sym_index(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return a * kRepDim - a * (a - 1) / 2 + (b - a);
}

constexpr std::size_t kSymUnknowns = kRepDim * (kRepDim + 1) / 2;

std::vector<std::pair<Matrix<QRat>, Matrix<QRat>>> adjoint_pairs(const Rep8& rep) {
  std::vector<std::pair<Matrix<QRat>, Matrix<QRat>>> pairs;
  for (std::size_t i = 0; i < 3; ++i) {
    const QRat qinv = q_node(static_cast<int>(i)).inverse();
    pairs.emplace_back(rep.T[i], rep.T[i]);
    pairs.emplace_back(rep.E[i], qinv * (rep.Tinv[i] * rep.F[i]));
    pairs.emplace_back(rep.F[i], qinv * (rep.T[i] * rep.E[i]));
  }
  return pairs;
}

}  // namespace

Matrix<QRat> build_polarization(const Rep8& rep) {
  std::vector<std::vector<QRat>> rows;
  std::vector<QRat> rhs;
  // X^T G = G Y, entry (r, c).
  for (const auto& [X, Y] : adjoint_pairs(rep))
    for (std::size_t r = 0; r < kRepDim; ++r)
      for (std::size_t c = 0; c < kRepDim; ++c) {
        std::vector<QRat> row(kSymUnknowns);
        for (std::size_t k = 0; k < kRepDim; ++k) {
          if (!X(k, r).is_zero()) row[sym_index(k, c)] += X(k, r);
          if (!Y(k, c).is_zero()) row[sym_index(r, k)] -= Y(k, c);
        }
        bool any = false;
        for (const auto& v : row) any = any || !v.is_zero();
        if (!any) continue;
        rows.push_back(std::move(row));
        rhs.emplace_back();
      }
  auto pin = [&](std::size_t a, std::size_t b, QRat v) {
    std::vector<QRat> row(kSymUnknowns);
    row[sym_index(a, b)] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(v));
  };
  pin(V1, V1, 1);
  for (std::size_t k = 0; k < VPHI; ++k) pin(k, VPHI, 0);
  pin(VPHI, VPHI, qp(1) * qi(3) / qi(2));

  Matrix<QRat> a(rows.size(), kSymUnknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < kSymUnknowns; ++c) a(r, c) = rows[r][c];
  const auto sol = solve_linear(a, rhs);
  if (sol.kind == LinearSolution<QRat>::Kind::Inconsistent)
    throw std::logic_error("build_polarization: adjointness system is inconsistent");
  if (sol.kind != LinearSolution<QRat>::Kind::Unique)
    throw std::logic_error("build_polarization: normalized form is not unique");
  Matrix<QRat> g(kRepDim, kRepDim);
  for (std::size_t r = 0; r < kRepDim; ++r)
    for (std::size_t c = 0; c < kRepDim; ++c) g(r, c) = sol.particular[sym_index(r, c)];
  return g;
}

std::vector<RelationCheck> check_polarization(const Rep8& rep, const Matrix<QRat>& gram) {
  std::vector<RelationCheck> out;
  out.push_back(residual_check("symmetric", gram.transpose() - gram));
  static const char* names[] = {"t", "e", "f"};
  int k = 0;
  for (const auto& [X, Y] : adjoint_pairs(rep)) {
    out.push_back(residual_check(std::string("adjoint ") + names[k % 3] + std::to_string(k / 3),
                                 X.transpose() * gram - gram * Y));
    ++k;
  }
  return out;
}

TensorRep<LPoly2> tensor_rep(const SpectralRep& a, const SpectralRep& b) {
  if (!a.rep || !b.rep) throw std::invalid_argument("tensor_rep: missing representation");
  if (a.variable == b.variable) throw std::invalid_argument("tensor_rep: spectral variables must differ");
  auto ex = [](const SpectralRep& s, int sign) { return s.variable == 0 ? std::pair{sign, 0} : std::pair{0, sign}; };
  TensorRep<LPoly2> t;
  const auto I = lift_scaled(Matrix<QRat>::identity(kRepDim), 0, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    const int d = i == 0 ? 1 : 0;
    const auto [ax, ay] = ex(a, d);
    const auto [bx, by] = ex(b, d);
    const auto Ta = lift_scaled(a.rep->T[i], 0, 0);
    const auto Tai = lift_scaled(a.rep->Tinv[i], 0, 0);
    const auto Tb = lift_scaled(b.rep->T[i], 0, 0);
    const auto Tbi = lift_scaled(b.rep->Tinv[i], 0, 0);
    t.E[i] = kron(lift_scaled(a.rep->E[i], ax, ay), Tbi) + kron(I, lift_scaled(b.rep->E[i], bx, by));
    t.F[i] = kron(lift_scaled(a.rep->F[i], -ax, -ay), I) + kron(Ta, lift_scaled(b.rep->F[i], -bx, -by));
    t.T[i] = kron(Ta, Tb);
    t.Tinv[i] = kron(Tai, Tbi);
  }
  return t;
}

TensorRep<QRat> tensor_rep(const Rep8& rep) {
  TensorRep<QRat> t;
  const auto I = SparseMatrix<QRat>::identity(kRepDim);
  for (std::size_t i = 0; i < 3; ++i) {
    const SparseMatrix<QRat> E(rep.E[i]), F(rep.F[i]), T(rep.T[i]), Ti(rep.Tinv[i]);
    t.E[i] = kron(E, Ti) + kron(I, E);
    t.F[i] = kron(F, I) + kron(T, F);
    t.T[i] = kron(T, T);
    t.Tinv[i] = kron(Ti, Ti);
  }
  return t;
}

std::vector<HighestVector> highest_vectors() {
  auto vec = [](std::initializer_list<std::tuple<int, int, QRat>> terms) {
    TensorVec v(kTensorDim);
    for (const auto& [a, b, c] : terms) v[tensor_index(a, b)] += c;
    return v;
  };
  const ClWeight la1{-2, 1, 0};
  std::vector<HighestVector> out;
  out.push_back({HighestLabel::L2La1, "u_2La1", vec({{V1, V1, 1}}), 2 * la1});
  out.push_back({HighestLabel::La2, "u_La2", vec({{V1, V2, 1}, {V2, V1, -qp(1)}}), ClWeight{-3, 0, 1}});
  out.push_back({HighestLabel::La1_1, "u_La1^(1)", vec({{V1, VPHI, 1}}), la1});
  out.push_back({HighestLabel::La1_2, "u_La1^(2)", vec({{VPHI, V1, 1}}), la1});
  out.push_back({HighestLabel::La1_3, "u_La1^(3)",
                 vec({{V1, V0, 1}, {V0, V1, -qp(6)}, {V2, V3, -qp(2) * qi(2)}, {V3, V2, qp(5) * qi(2)}}), la1});
  out.push_back({HighestLabel::Zero_1, "u_0^(1)", vec({{VPHI, VPHI, 1}}), ClWeight{}});
  out.push_back({HighestLabel::Zero_2, "u_0^(2)",
                 vec({{V1, V1B, 1},
                      {V1B, V1, qp(10)},
                      {V2, V2B, -qp(1)},
                      {V2B, V2, -qp(9)},
                      {V3, V3B, qp(4)},
                      {V3B, V3, qp(6)},
                      {V0, V0, -qp(4) / qi(2)}}),
                 ClWeight{}});
  return out;
}

std::vector<RelationCheck> check_highest_vectors(const Rep8& rep) {
  const auto t = tensor_rep(rep);
  std::vector<RelationCheck> out;
  for (const auto& h : highest_vectors()) {
    RelationCheck weight{h.name + " weight", true, 0, ""};
    for (int a = 0; a < kRepDim; ++a)
      for (int b = 0; b < kRepDim; ++b)
        if (!h.vec[tensor_index(a, b)].is_zero() &&
            rep.weight[static_cast<std::size_t>(a)] + rep.weight[static_cast<std::size_t>(b)] != h.weight) {
          weight.pass = false;
          ++weight.residual_nonzeros;
          weight.residual = basis_label(a) + "⊗" + basis_label(b);
        }
    out.push_back(weight);
    for (std::size_t i : {1, 2}) {
      const auto image = t.E[i].apply(h.vec);
      Matrix<QRat> m(kTensorDim, 1);
      m.set_column(0, image);
      out.push_back(residual_check(h.name + " e" + std::to_string(i), m));
    }
  }
  return out;
}

const std::vector<LoweringIdentity>& lowering_identities() {
  static const std::vector<LoweringIdentity> ids = [] {
    const LPoly2 X = LPoly2::x(), Y = LPoly2::y();
    const QRat b2 = qi(2), b3 = qi(3);
    const std::vector<int> w1{0, 1, 2};
    const std::vector<int> w2{0};
    const std::vector<int> w5{0, 0, 1, 2, 1};
    const std::vector<int> w8{0, 0, 0, 1, 2, 1, 1, 2, 1};
    const std::vector<int> w11{0, 0};
    const std::vector<int> w13{0, 0, 0, 1, 2, 1, 1, 2, 1, 0};
    using H = HighestLabel;
    std::vector<LoweringIdentity> v;
    v.push_back({1, "f0 f1 f2 u_La2", w1, H::La2, mono(qp(-1), -1, -1) * (X - qp(2) * Y)});
    v.push_back({2, "f0 u_La1^(1)", w2, H::La1_1, mono(qp(-2) * b3 / b2, 0, -1)});
    v.push_back({3, "f0 u_La1^(2)", w2, H::La1_2, mono(b3 / b2, -1, 0)});
    v.push_back({4, "f0 u_La1^(3)", w2, H::La1_3, mono(qp(-2), -1, -1) * (X - qp(8) * Y)});
    v.push_back({5, "f0^2 f1 f2 f1 u_La1^(1)", w5, H::La1_1, mono(qp(-1) * b3, -1, -1)});
    v.push_back({6, "f0^2 f1 f2 f1 u_La1^(2)", w5, H::La1_2, mono(qp(-1) * b3, -1, -1)});
    v.push_back({7, "f0^2 f1 f2 f1 u_La1^(3)", w5, H::La1_3,
                 mono(qp(-2) * b2, -2, -2) *
                     (b2 * (X * X - qp(8) * Y * Y) - qp(3) * (QRat(1) - qp(2)) * X * Y)});
    v.push_back({8, "f0^3 (f1 f2 f1)^2 u_La1^(1)", w8, H::La1_1, mono(b2 * b3 * b3, -2, -1)});
    v.push_back({9, "f0^3 (f1 f2 f1)^2 u_La1^(2)", w8, H::La1_2, mono(qp(-2) * b2 * b3 * b3, -1, -2)});
    v.push_back({10, "f0^3 (f1 f2 f1)^2 u_La1^(3)", w8, H::La1_3,
                 mono(qp(-2) * b2 * b2 * b3, -2, -2) * (X - qp(8) * Y)});
    v.push_back({11, "f0^2 u_0^(1)", w11, H::Zero_1, mono(qp(-1) * b3 * b3 / b2, -1, -1)});
    v.push_back({12, "f0^2 u_0^(2)", w11, H::Zero_2,
                 mono(qp(-4), -2, -2) * (b2 * (X * X + qp(14) * Y * Y) - qp(7) * X * Y)});
    v.push_back({13, "f0^3 (f1 f2 f1)^2 f0 u_0^(1)", w13, H::Zero_1,
                 mono(qp(-2) * b3 * b3 * b3, -3, -3) * (X * X + qp(2) * Y * Y)});
    v.push_back({14, "f0^3 (f1 f2 f1)^2 f0 u_0^(2)", w13, H::Zero_2,
                 mono(qp(-4) * b2 * b3, -3, -3) *
                     ((X - qp(6) * Y) * (X - qp(8) * Y) + qp(2) * b3 * (QRat(1) + qp(10)) * X * Y)});
    return v;
  }();
  return ids;
}

SpectralVec lift(const TensorVec& v) {
  SpectralVec out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c);
  return out;
}

SpectralVec apply_word(const TensorRep<LPoly2>& t, const std::vector<int>& word, SpectralVec v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it > 2) throw std::invalid_argument("apply_word: colour out of range");
    v = t.F[static_cast<std::size_t>(*it)].apply(v);
  }
  return v;
}

std::optional<LPoly2> multiple_of_vacuum(const SpectralVec& v) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (!v[k].is_zero()) return std::nullopt;
  return v.empty() ? LPoly2{} : v[0];
}

std::vector<LoweringResult> verify_lowering_identities(const Rep8& rep) {
  const auto t = tensor_rep(SpectralRep{&rep, 0}, SpectralRep{&rep, 1});
  const auto hv = highest_vectors();
  std::vector<LoweringResult> out;
  for (const auto& id : lowering_identities()) {
    LoweringResult r;
    r.number = id.number;
    const auto& src = hv[static_cast<std::size_t>(id.source)];
    r.computed = multiple_of_vacuum(apply_word(t, id.word, lift(src.vec)));
    if (!r.computed) {
      r.difference = "image is not a multiple of u_2La1";
    } else {
      const LPoly2 diff = *r.computed - id.expected;
      r.pass = diff.is_zero();
      if (!r.pass) r.difference = diff.str();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace d43
