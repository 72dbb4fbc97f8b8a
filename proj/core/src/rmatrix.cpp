#include "d43/rmatrix.hpp"

#include "d43/parallel.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace d43 {

namespace {

QRat qp(long k) { return QRat::q_power(k); }

constexpr std::array<std::size_t, 7> kDims{27, 14, 7, 7, 7, 1, 1};

/// Incremental echelon basis used for span tests.
class SpanTester {
 public:
  bool add(TensorVec v) {
    for (const auto& [p, r] : rows_) {
      if (v[p].is_zero()) continue;
      const QRat c = v[p];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!r[k].is_zero()) v[k] -= c * r[k];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const QRat inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    for (auto& [pp, r] : rows_)
      if (!r[p].is_zero()) {
        const QRat c = r[p];
        for (std::size_t k = 0; k < v.size(); ++k)
          if (!v[k].is_zero()) r[k] -= c * v[k];
      }
    rows_.emplace_back(p, std::move(v));
    return true;
  }

 private:
  std::vector<std::pair<std::size_t, TensorVec>> rows_;
};

bool is_zero_vec(const TensorVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

TensorVec apply_classical(const TensorRep<QRat>& t, const std::vector<int>& word, TensorVec v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = t.F[static_cast<std::size_t>(*it)].apply(v);
  return v;
}

std::string sparse_residual(const SparseMatrix<QRat>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) {
      std::ostringstream os;
      os << m.nonzeros() << " nonzero entries, first (" << r << "," << m.row(r).front().first
         << ") = " << m.row(r).front().second.str();
      return os.str();
    }
  return "";
}

RCheck zero_check(std::string name, const SparseMatrix<QRat>& residual) {
  return {std::move(name), residual.is_zero(), sparse_residual(residual)};
}

std::vector<std::size_t> offsets() {
  std::vector<std::size_t> off{0};
  for (auto d : kDims) off.push_back(off.back() + d);
  return off;
}

/// Components, change of basis and the G2 action in component coordinates.
void assemble(const Rep8& rep, RBuild& b) {
  const auto t = tensor_rep(rep);
  const auto hv = highest_vectors();
  std::map<HighestLabel, const G2Component*> first_of_type;
  auto type_leader = [](HighestLabel l) {
    switch (l) {
      case HighestLabel::La1_2:
      case HighestLabel::La1_3:
        return HighestLabel::La1_1;
      case HighestLabel::Zero_2:
        return HighestLabel::Zero_1;
      default:
        return l;
    }
  };
  b.components.clear();
  b.components.reserve(hv.size());
  for (std::size_t k = 0; k < hv.size(); ++k) {
    const auto& h = hv[k];
    G2Component c;
    c.label = h.label;
    c.name = h.name;
    const auto leader = type_leader(h.label);
    if (leader == h.label) {
      SpanTester span;
      span.add(h.vec);
      c.words.push_back({});
      c.basis.push_back(h.vec);
      for (std::size_t n = 0; n < c.basis.size(); ++n)
        for (int g : {1, 2}) {
          TensorVec v = t.F[static_cast<std::size_t>(g)].apply(c.basis[n]);
          if (is_zero_vec(v) || !span.add(v)) continue;
          std::vector<int> w{g};
          w.insert(w.end(), c.words[n].begin(), c.words[n].end());
          c.words.push_back(std::move(w));
          c.basis.push_back(std::move(v));
        }
    } else {
      c.words = b.components[static_cast<std::size_t>(leader)].words;
      for (const auto& w : c.words) c.basis.push_back(apply_classical(t, w, h.vec));
    }
    if (c.basis.size() != kDims[k])
      throw std::logic_error("build_components: " + c.name + " has dimension " + std::to_string(c.basis.size()));
    b.components.push_back(std::move(c));
  }

  b.basis = Matrix<QRat>(kTensorDim, kTensorDim);
  std::size_t col = 0;
  for (const auto& c : b.components)
    for (const auto& v : c.basis) b.basis.set_column(col++, v);
  try {
    b.basis_inverse = inverse(b.basis);
  } catch (const std::domain_error&) {
    throw std::logic_error("build_components: component bases are not independent");
  }

  const SparseMatrix<QRat> M(b.basis), Minv(b.basis_inverse);
  const std::array<const SparseMatrix<QRat>*, 4> ops{&t.F[1], &t.F[2], &t.E[1], &t.E[2]};
  const auto off = offsets();
  for (std::size_t g = 0; g < ops.size(); ++g) {
    const Matrix<QRat> act = (Minv * (*ops[g] * M)).dense();
    for (std::size_t k = 0; k < b.components.size(); ++k) {
      Matrix<QRat> block(kDims[k], kDims[k]);
      for (std::size_t r = 0; r < kTensorDim; ++r)
        for (std::size_t c = off[k]; c < off[k + 1]; ++c) {
          if (act(r, c).is_zero()) continue;
          if (r < off[k] || r >= off[k + 1])
            throw std::logic_error("build_components: " + b.components[k].name + " is not G2-stable");
          block(r - off[k], c - off[k]) = act(r, c);
        }
      b.components[k].action[g] = std::move(block);
    }
  }
  for (std::size_t k = 0; k < b.components.size(); ++k) {
    const auto leader = static_cast<std::size_t>(type_leader(b.components[k].label));
    if (b.components[k].action != b.components[leader].action)
      throw std::logic_error("build_components: isomorphism to " + b.components[k].name + " depends on words");
  }
}

RMatrix conjugate(const RBuild& b, const RCoefficients& c) {
  const auto off = offsets();
  int deg = 0;
  auto note = [&](const LPoly2& p) {
    for (const auto& [e, v] : p.terms()) {
      if (e.second != 0 || e.first < 0) throw std::invalid_argument("build_R: coefficient is not a polynomial in z");
      deg = std::max(deg, e.first);
    }
  };
  note(c.a2La1);
  note(c.aLa2);
  for (const auto& r : c.aLa1)
    for (const auto& v : r) note(v);
  for (const auto& r : c.a0)
    for (const auto& v : r) note(v);

  std::vector<Matrix<QRat>> D(static_cast<std::size_t>(deg + 1), Matrix<QRat>(kTensorDim, kTensorDim));
  auto put = [&](std::size_t r, std::size_t col, const LPoly2& p) {
    for (const auto& [e, v] : p.terms()) D[static_cast<std::size_t>(e.first)](r, col) = v;
  };
  for (std::size_t p = 0; p < kDims[0]; ++p) put(off[0] + p, off[0] + p, c.a2La1);
  for (std::size_t p = 0; p < kDims[1]; ++p) put(off[1] + p, off[1] + p, c.aLa2);
  // R u^(i) = Σ_j a_ij u^(j), extended along the shared lowering words.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 7; ++p) put(off[2 + j] + p, off[2 + i] + p, c.aLa1[i][j]);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) put(off[5 + j], off[5 + i], c.a0[i][j]);

  const SparseMatrix<QRat> M(b.basis), Minv(b.basis_inverse);
  RMatrix R;
  for (const auto& d : D) R.coeff.push_back(M * (SparseMatrix<QRat>(d) * Minv));
  return R;
}

LPoly2 det2(const std::array<std::array<LPoly2, 2>, 2>& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

LPoly2 det3(const std::array<std::array<LPoly2, 3>, 3>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// z^k -> x^k y^-k.
LPoly2 z_to_xy(const LPoly2& p) {
  LPoly2 r;
  for (const auto& [e, v] : p.terms()) r += LPoly2::monomial(v, e.first, -e.first);
  return r;
}

template <class S>
SparseMatrix<S> combine(const std::vector<SparseMatrix<QRat>>& coeff, const std::function<S(const QRat&)>& conv,
                        const S& z) {
  SparseMatrix<S> acc(kTensorDim, kTensorDim);
  S zk = ScalarTraits<S>::one();
  for (const auto& c : coeff) {
    acc = acc + zk * c.map(conv);
    zk = zk * z;
  }
  return acc;
}

}  // namespace

LPoly2 z_poly(std::initializer_list<QRat> coeffs) {
  LPoly2 p;
  int k = 0;
  for (const auto& c : coeffs) p += LPoly2::monomial(c, k++, 0);
  return p;
}

LPoly2 z_reverse(const LPoly2& p, int d) { return p.x_inverted().shifted(d, 0); }

RCoefficients proposition_coefficients() {
  const LPoly2 z = LPoly2::x();
  const LPoly2 one(1);
  const QRat b = QRat(1) + qp(2);
  RCoefficients c;
  const LPoly2 cubic = one + qp(4) * z + qp(8) * z * z;
  c.a2La1 = (one - qp(2) * z) * (one - qp(6) * z) * cubic;
  c.aLa2 = (z - qp(2)) * (one - qp(6) * z) * cubic;
  auto& A = c.aLa1;
  A[0][0] = (QRat(1) - qp(6)) / b * z * (one - qp(12) * z * z);
  A[1][1] = A[0][0];
  A[0][1] = qp(2) / b * (one - z) * (one - qp(6) * z) * (b * (one + qp(6) * z * z) + (qp(2) + qp(6)) * z);
  A[1][0] = A[0][1];
  A[0][2] = qp(1) * (QRat(1) - qp(6)) / (b * b) * z * (one - z) * (one - qp(6) * z);
  A[1][2] = A[0][2];
  A[2][0] = b * b * (QRat(1) + qp(8)) * A[0][2];
  A[2][1] = A[2][0];
  A[2][2] = QRat(1) / b * (one - qp(6) * z) *
            (qp(2) * b * (z * z * z - qp(6)) + (QRat(1) - qp(2)) * (QRat(1) - qp(6)) * z * (z - qp(4)));
  auto& Z = c.a0;
  Z[0][0] = QRat(1) / b *
            (b * (qp(2) + qp(14) * z.pow(4)) - (QRat(1) + qp(8)) * z * (qp(2) + qp(8) * z * z) +
             (QRat(1) - qp(4)) * (QRat(1) - qp(6)) * (QRat(1) + qp(8)) * z * z);
  Z[0][1] = qp(1) * (QRat(1) - qp(6)).pow(2) / (b * (QRat(1) - qp(4))) * z * (one - z * z);
  Z[1][0] = qp(1) * (QRat(1) - qp(14)) * (QRat(1) - qp(4) + qp(8)) * z * (one - z * z);
  Z[1][1] = z_reverse(Z[0][0], 4);
  return c;
}

LPoly2 RMatrix::entry(std::size_t r, std::size_t c) const {
  LPoly2 p;
  for (std::size_t k = 0; k < coeff.size(); ++k)
    for (const auto& [col, v] : coeff[k].row(r))
      if (col == c) p += LPoly2::monomial(v, static_cast<int>(k), 0);
  return p;
}

Matrix<mpq_class> RMatrix::eval(const mpq_class& q, const mpq_class& z) const {
  return combine<mpq_class>(coeff, [&](const QRat& v) { return v.eval(q); }, z).dense();
}

Matrix<QRat> RMatrix::eval(const QRat& z) const {
  return combine<QRat>(coeff, [](const QRat& v) { return v; }, z).dense();
}

std::vector<G2Component> build_components(const Rep8& rep) {
  RBuild b;
  assemble(rep, b);
  return b.components;
}

RBuild build_R(const Rep8& rep, const RCoefficients& c) {
  RBuild b;
  assemble(rep, b);
  return rebuild_R(b, c);
}

RBuild rebuild_R(const RBuild& base, const RCoefficients& c) {
  RBuild b = base;
  b.coefficients = c;
  b.R = conjugate(b, c);
  return b;
}

SparseMatrix<QRat> projection(const RBuild& b, std::size_t k) {
  if (k >= kDims.size()) throw std::out_of_range("projection: component index out of range");
  const auto off = offsets();
  SparseMatrix<QRat> E(kTensorDim, kTensorDim);
  for (std::size_t r = off[k]; r < off[k + 1]; ++r) E.push(r, static_cast<std::uint32_t>(r), 1);
  return SparseMatrix<QRat>(b.basis) * (E * SparseMatrix<QRat>(b.basis_inverse));
}

std::vector<RCheck> verify_intertwiner(const Rep8& rep, const RMatrix& R) {
  const auto t = tensor_rep(rep);
  const auto I = SparseMatrix<QRat>::identity(kRepDim);
  const SparseMatrix<QRat> E0(rep.E[0]), F0(rep.F[0]), T0(rep.T[0]), T0i(rep.Tinv[0]);
  const auto A = kron(E0, T0i), B = kron(I, E0), C = kron(F0, I), D = kron(T0, F0);
  const int n = R.degree();
  const SparseMatrix<QRat> zero(kTensorDim, kTensorDim);
  auto Rk = [&](int k) -> const SparseMatrix<QRat>& {
    return k < 0 || k > n ? zero : R.coeff[static_cast<std::size_t>(k)];
  };
  std::vector<RCheck> out;
  // R (zA + B) = (A + zB) R and R (C + zD) = (zC + D) R, coefficientwise in z.
  SparseMatrix<QRat> res_e = zero, res_f = zero;
  std::string where_e, where_f;
  for (int k = 0; k <= n + 1; ++k) {
    const auto re = Rk(k - 1) * A + Rk(k) * B - (A * Rk(k) + B * Rk(k - 1));
    if (!re.is_zero() && res_e.is_zero()) {
      res_e = re;
      where_e = "z^" + std::to_string(k) + ": ";
    }
    const auto rf = Rk(k) * C + Rk(k - 1) * D - (C * Rk(k - 1) + D * Rk(k));
    if (!rf.is_zero() && res_f.is_zero()) {
      res_f = rf;
      where_f = "z^" + std::to_string(k) + ": ";
    }
  }
  out.push_back({"e0", res_e.is_zero(), res_e.is_zero() ? "" : where_e + sparse_residual(res_e)});
  out.push_back({"f0", res_f.is_zero(), res_f.is_zero() ? "" : where_f + sparse_residual(res_f)});
  const std::vector<std::pair<std::string, const SparseMatrix<QRat>*>> gens{
      {"e1", &t.E[1]}, {"e2", &t.E[2]}, {"f1", &t.F[1]}, {"f2", &t.F[2]},
      {"t0", &t.T[0]}, {"t1", &t.T[1]}, {"t2", &t.T[2]}};
  for (const auto& [name, g] : gens) {
    RCheck c{name, true, ""};
    for (int k = 0; k <= n && c.pass; ++k) {
      const auto res = Rk(k) * *g - *g * Rk(k);
      if (!res.is_zero()) c = {name, false, "z^" + std::to_string(k) + ": " + sparse_residual(res)};
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<RCheck> verify_projections(const Rep8& rep, const RBuild& b) {
  const auto t = tensor_rep(rep);
  std::vector<SparseMatrix<QRat>> P;
  for (std::size_t k = 0; k < kDims.size(); ++k) P.push_back(projection(b, k));
  std::vector<RCheck> out;
  SparseMatrix<QRat> sum(kTensorDim, kTensorDim);
  for (std::size_t k = 0; k < P.size(); ++k) {
    const auto& name = b.components[k].name;
    out.push_back(zero_check("P " + name + " idempotent", P[k] * P[k] - P[k]));
    for (std::size_t j = 0; j < P.size(); ++j)
      if (j != k) out.push_back(zero_check("P " + name + " P " + b.components[j].name, P[k] * P[j]));
    for (std::size_t i : {1, 2}) {
      out.push_back(zero_check("P " + name + " e" + std::to_string(i), P[k] * t.E[i] - t.E[i] * P[k]));
      out.push_back(zero_check("P " + name + " f" + std::to_string(i), P[k] * t.F[i] - t.F[i] * P[k]));
      out.push_back(zero_check("P " + name + " t" + std::to_string(i), P[k] * t.T[i] - t.T[i] * P[k]));
    }
    sum = sum + P[k];
  }
  out.push_back(zero_check("sum of projections", sum - SparseMatrix<QRat>::identity(kTensorDim)));
  return out;
}

std::vector<RCheck> verify_determinants(const RCoefficients& c) {
  const LPoly2 z = LPoly2::x();
  const LPoly2 one(1);
  const LPoly2 cubic = one + qp(4) * z + qp(8) * z * z;
  const LPoly2 cubic_rev = z * z + qp(4) * z + qp(8);
  const auto& a = c.a2La1;
  std::vector<RCheck> out;
  {
    const LPoly2 lhs = det3(c.aLa1) * (one - qp(2) * z).pow(2) * cubic;
    const LPoly2 rhs = (z - qp(2)).pow(2) * cubic_rev * a.pow(3);
    const LPoly2 diff = lhs - rhs;
    out.push_back({"det a^La1", diff.is_zero(), diff.is_zero() ? "" : diff.str()});
  }
  {
    const LPoly2 lhs = det2(c.a0) * (one - qp(2) * z) * (one - qp(6) * z) * cubic;
    const LPoly2 rhs = (z - qp(2)) * (z - qp(6)) * cubic_rev * a.pow(2);
    const LPoly2 diff = lhs - rhs;
    out.push_back({"det a^0", diff.is_zero(), diff.is_zero() ? "" : diff.str()});
  }
  return out;
}

RCheck verify_unitarity(const RBuild& b) {
  // R is block diagonal in the component basis with blocks a^T; R(z) z^d R(1/z)
  // is conjugate to the blockwise products.
  const int d = b.R.degree();
  const auto& c = b.coefficients;
  const LPoly2 s = c.a2La1 * z_reverse(c.a2La1, d);
  RCheck out{"R(z) R(1/z) scalar", true, ""};
  auto fail = [&](const std::string& what) {
    if (out.pass) out = {"R(z) R(1/z) scalar", false, what};
  };
  if (c.aLa2 * z_reverse(c.aLa2, d) != s) fail("La2 block differs");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      LPoly2 e;
      for (std::size_t k = 0; k < 3; ++k) e += c.aLa1[k][i] * z_reverse(c.aLa1[j][k], d);
      if (e != (i == j ? s : LPoly2{})) fail("La1 block entry " + std::to_string(i) + std::to_string(j));
    }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      LPoly2 e;
      for (std::size_t k = 0; k < 2; ++k) e += c.a0[k][i] * z_reverse(c.a0[j][k], d);
      if (e != (i == j ? s : LPoly2{})) fail("0 block entry " + std::to_string(i) + std::to_string(j));
    }
  if (out.pass) out.detail = s.str();
  return out;
}

LPoly2 vacuum_eigenvalue(const RMatrix& R) {
  const std::size_t v = tensor_index(V1, V1);
  for (std::size_t k = 0; k < R.coeff.size(); ++k)
    for (std::size_t r = 0; r < kTensorDim; ++r)
      for (const auto& [col, val] : R.coeff[k].row(r))
        if (col == v && r != v) throw std::logic_error("vacuum_eigenvalue: v1⊗v1 is not an eigenvector");
  return R.entry(v, v);
}

LPoly2 phi_polynomial() {
  const LPoly2 z = LPoly2::x();
  const LPoly2 one(1);
  return (one - qp(2) * z) * (one - qp(6) * z) * (one + qp(4) * z + qp(8) * z * z);
}

bool phi_nonvanishing(const LPoly2& phi, long k_max) {
  for (long k = 1; k <= k_max; ++k)
    if (phi.eval_x(qp(2 * k)).is_zero()) return false;
  return true;
}

std::vector<RCheck> verify_coefficients_by_lowering(const Rep8& rep, const RCoefficients& c) {
  const auto t = tensor_rep(SpectralRep{&rep, 0}, SpectralRep{&rep, 1});
  const auto hv = highest_vectors();
  auto image = [&](const std::vector<int>& w, HighestLabel l) {
    auto m = multiple_of_vacuum(apply_word(t, w, lift(hv[static_cast<std::size_t>(l)].vec)));
    if (!m) throw std::logic_error("verify_coefficients_by_lowering: image is not a multiple of u_2La1");
    return *m;
  };
  const LPoly2 a = z_to_xy(c.a2La1);
  std::vector<RCheck> out;
  auto record = [&](std::string name, const LPoly2& diff) {
    out.push_back({std::move(name), diff.is_zero(), diff.is_zero() ? "" : diff.str()});
  };
  {
    const LPoly2 u = image({0, 1, 2}, HighestLabel::La2);
    record("a^La2 via f0 f1 f2", z_to_xy(c.aLa2) * u.swapped() - a * u);
  }
  using H = HighestLabel;
  const std::vector<std::vector<int>> la1_words{{0}, {0, 0, 1, 2, 1}, {0, 0, 0, 1, 2, 1, 1, 2, 1}};
  const std::array<H, 3> la1{H::La1_1, H::La1_2, H::La1_3};
  for (std::size_t w = 0; w < la1_words.size(); ++w) {
    std::array<LPoly2, 3> cw;
    for (std::size_t j = 0; j < 3; ++j) cw[j] = image(la1_words[w], la1[j]);
    for (std::size_t i = 0; i < 3; ++i) {
      LPoly2 lhs;
      for (std::size_t j = 0; j < 3; ++j) lhs += z_to_xy(c.aLa1[i][j]) * cw[j].swapped();
      record("a^La1 row " + std::to_string(i + 1) + " word " + std::to_string(w + 1), lhs - a * cw[i]);
    }
  }
  const std::vector<std::vector<int>> zero_words{{0, 0}, {0, 0, 0, 1, 2, 1, 1, 2, 1, 0}};
  const std::array<H, 2> zero{H::Zero_1, H::Zero_2};
  for (std::size_t w = 0; w < zero_words.size(); ++w) {
    std::array<LPoly2, 2> cw;
    for (std::size_t j = 0; j < 2; ++j) cw[j] = image(zero_words[w], zero[j]);
    for (std::size_t i = 0; i < 2; ++i) {
      LPoly2 lhs;
      for (std::size_t j = 0; j < 2; ++j) lhs += z_to_xy(c.a0[i][j]) * cw[j].swapped();
      record("a^0 row " + std::to_string(i + 1) + " word " + std::to_string(w + 1), lhs - a * cw[i]);
    }
  }
  return out;
}

std::vector<YbeSample> ybe_samples(std::size_t n, std::uint64_t seed) {
  std::vector<YbeSample> out{{2, 1, 3, 5}, {mpq_class(3, 2), 2, 7, 11}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(2, 13), den(1, 7), spec(1, 60);
  while (out.size() < n) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    if (q == 1) continue;
    const long x = spec(rng), y = spec(rng), z = spec(rng);
    if (x == y || y == z || x == z) continue;
    out.push_back({q, x, y, z});
  }
  out.resize(n);
  return out;
}

namespace {

template <class S>
std::size_t ybe_residual(const SparseMatrix<S>& Rxy, const SparseMatrix<S>& Rxz, const SparseMatrix<S>& Ryz) {
  const auto lhs = Ryz.kron_identity_right(kRepDim) * (Rxz.kron_identity_left(kRepDim) * Rxy.kron_identity_right(kRepDim));
  const auto rhs = Rxy.kron_identity_left(kRepDim) * (Rxz.kron_identity_right(kRepDim) * Ryz.kron_identity_left(kRepDim));
  return (lhs - rhs).nonzeros();
}

}  // namespace

YbeResult verify_yang_baxter(const RMatrix& R, const std::vector<YbeSample>& samples, unsigned jobs) {
  std::vector<std::size_t> residual(samples.size());
  parallel_for(samples.size(), jobs, [&](std::size_t k) {
    const auto& s = samples[k];
    auto at = [&](const mpq_class& ratio) {
      return combine<mpq_class>(R.coeff, [&](const QRat& v) { return v.eval(s.q); }, ratio);
    };
    residual[k] = ybe_residual(at(s.x / s.y), at(s.x / s.z), at(s.y / s.z));
  });
  YbeResult r;
  r.checked = samples.size();
  for (std::size_t k = 0; k < samples.size(); ++k)
    if (residual[k] != 0 && !r.first_failure) {
      r.first_failure = samples[k];
      r.residual_nonzeros = residual[k];
    }
  r.pass = !r.first_failure;
  return r;
}

namespace {

// R with every q-denominator cleared by one common multiple, as integer
// polynomials in q, plus the L1 norm of each entry.
struct ClearedR {
  std::vector<SparseMatrix<mpq_class>> norm;
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, ZPoly>>>> poly;
};

ClearedR clear_denominators(const RMatrix& R) {
  ZPoly D(1);
  for (const auto& m : R.coeff)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) D = ZPoly::divide(D * v.den(), ZPoly::gcd(D, v.den()));
  ClearedR out;
  for (const auto& m : R.coeff) {
    SparseMatrix<mpq_class> n(m.rows(), m.cols());
    std::vector<std::vector<std::pair<std::uint32_t, ZPoly>>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) {
        ZPoly p = v.num() * ZPoly::divide(D, v.den());
        mpz_class l1 = 0;
        for (const auto& a : p.coeffs()) l1 += abs(a);
        n.push(r, c, mpq_class(l1));
        rows[r].emplace_back(c, std::move(p));
      }
    out.norm.push_back(std::move(n));
    out.poly.push_back(std::move(rows));
  }
  return out;
}

SparseMatrix<mpq_class> norm_at(const ClearedR& R, const mpq_class& z) {
  SparseMatrix<mpq_class> acc(kTensorDim, kTensorDim);
  mpq_class zk = 1;
  for (const auto& n : R.norm) {
    acc = acc + zk * n;
    zk *= z;
  }
  return acc;
}

SparseMatrix<mpq_class> value_at(const ClearedR& R, const mpz_class& Q, const mpq_class& z) {
  SparseMatrix<mpq_class> acc(kTensorDim, kTensorDim);
  mpq_class zk = 1;
  for (const auto& rows : R.poly) {
    SparseMatrix<mpq_class> m(kTensorDim, kTensorDim);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, p] : rows[r]) m.push(r, c, mpq_class(p.eval(Q)));
    acc = acc + zk * m;
    zk *= z;
  }
  return acc;
}

mpq_class max_entry(const SparseMatrix<mpq_class>& m) {
  mpq_class best = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      if (v > best) best = v;
  return best;
}

}  // namespace

YbeResult verify_yang_baxter_symbolic(const RMatrix& R, unsigned jobs) {
  const long n = 2L * R.degree() + 1;
  const ClearedR cleared = clear_denominators(R);
  std::vector<std::size_t> residual(static_cast<std::size_t>(n * n));
  parallel_for(residual.size(), jobs, [&](std::size_t k) {
    const mpq_class u(2 + static_cast<long>(k) / n), v(2 + static_cast<long>(k) % n);
    // Both sides are integer polynomials in q whose coefficients are bounded
    // by the same products taken over the L1 norms. With Q = 2^B above twice
    // that bound, evaluation at Q is injective on the residual.
    const auto Nu = norm_at(cleared, u), Nuv = norm_at(cleared, u * v), Nv = norm_at(cleared, v);
    const auto bound = Nv.kron_identity_right(kRepDim) * (Nuv.kron_identity_left(kRepDim) * Nu.kron_identity_right(kRepDim)) +
                       Nu.kron_identity_left(kRepDim) * (Nuv.kron_identity_right(kRepDim) * Nv.kron_identity_left(kRepDim));
    const mpz_class m = mpz_class(max_entry(bound) * 2 + 1);
    const mpz_class Q = mpz_class(1) << static_cast<mp_bitcnt_t>(mpz_sizeinbase(m.get_mpz_t(), 2) + 1);
    residual[k] = ybe_residual(value_at(cleared, Q, u), value_at(cleared, Q, u * v), value_at(cleared, Q, v));
  });
  YbeResult r;
  r.checked = residual.size();
  for (std::size_t k = 0; k < residual.size(); ++k)
    if (residual[k] != 0 && !r.first_failure) {
      r.first_failure = YbeSample{0, mpq_class(2 + static_cast<long>(k) / n), 1, mpq_class(1, 2 + static_cast<long>(k) % n)};
      r.residual_nonzeros = residual[k];
    }
  r.pass = !r.first_failure;
  return r;
}

}  // namespace d43
