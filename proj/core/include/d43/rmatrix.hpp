#pragma once

// Spectral decomposition of the R-matrix on V^1 ⊗ V^1 and its checks.
// Polynomials in z = x/y are LPoly2 values with no y dependence.

#include "d43/fundrep.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace d43 {

struct G2Component {
  HighestLabel label;
  std::string name;
  /// Lowering words (right to left, colours 1 and 2) generating the basis.
  std::vector<std::vector<int>> words;
  std::vector<TensorVec> basis;
  /// Action of f1, f2, e1, e2 in `basis` coordinates.
  std::array<Matrix<QRat>, 4> action;
};

/// Breadth-first closure under Δf1, Δf2 from each highest vector. Copies of
/// the same isotypic type reuse the words of the first copy. Throws
/// std::logic_error if a dimension differs from (27, 14, 7, 7, 7, 1, 1) or a
/// basis is not closed under the G2 action.
std::vector<G2Component> build_components(const Rep8& rep);

/// Scalars and the Λ1 and trivial coefficient blocks, as polynomials in z.
struct RCoefficients {
  LPoly2 a2La1;
  LPoly2 aLa2;
  std::array<std::array<LPoly2, 3>, 3> aLa1;
  std::array<std::array<LPoly2, 2>, 2> a0;
};
RCoefficients proposition_coefficients();

LPoly2 z_poly(std::initializer_list<QRat> coeffs);
/// p(z) -> z^d p(1/z).
LPoly2 z_reverse(const LPoly2& p, int d);

/// R(z) = Σ_k z^k R_k.
struct RMatrix {
  std::vector<SparseMatrix<QRat>> coeff;
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  /// Entry (r, c) as a polynomial in z.
  LPoly2 entry(std::size_t r, std::size_t c) const;
  Matrix<mpq_class> eval(const mpq_class& q, const mpq_class& z) const;
  Matrix<QRat> eval(const QRat& z) const;
};

struct RBuild {
  std::vector<G2Component> components;
  /// Columns are the component bases, in component order.
  Matrix<QRat> basis;
  Matrix<QRat> basis_inverse;
  RCoefficients coefficients;
  RMatrix R;
};
RBuild build_R(const Rep8& rep, const RCoefficients& c = proposition_coefficients());
/// Reuse components and the change of basis of an earlier build.
RBuild rebuild_R(const RBuild& base, const RCoefficients& c);

/// Projection onto component k.
SparseMatrix<QRat> projection(const RBuild& b, std::size_t k);

struct RCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// R Δ_{x,y}(g) = Δ_{y,x}(g) R for the nine generators e_i, f_i, t_i.
std::vector<RCheck> verify_intertwiner(const Rep8& rep, const RMatrix& R);
/// Idempotent, mutually annihilating, summing to 1, commuting with the G2 action.
std::vector<RCheck> verify_projections(const Rep8& rep, const RBuild& b);
/// det(a^{Λ1}) and det(a^0) against the closed forms, cleared of denominators.
std::vector<RCheck> verify_determinants(const RCoefficients& c);
/// R(z) z^4 R(1/z) is a scalar polynomial times the identity.
RCheck verify_unitarity(const RBuild& b);
/// Column of v1⊗v1; throws std::logic_error if v1⊗v1 is not an eigenvector.
LPoly2 vacuum_eigenvalue(const RMatrix& R);
LPoly2 phi_polynomial();
/// φ(q^{2k}) != 0 for k = 1..k_max.
bool phi_nonvanishing(const LPoly2& phi, long k_max = 10);
/// Coefficients recovered from the computed lowering images: for every
/// identity w with source u^(i), Σ_j a_ij c_{w,j}(y,x) = a^{2Λ1} c_{w,i}(x,y).
std::vector<RCheck> verify_coefficients_by_lowering(const Rep8& rep, const RCoefficients& c);

struct YbeSample {
  mpq_class q, x, y, z;
};
/// The two fixed points followed by n - 2 pseudo-random generic ones.
std::vector<YbeSample> ybe_samples(std::size_t n, std::uint64_t seed);

struct YbeResult {
  bool pass = false;
  std::size_t checked = 0;
  std::optional<YbeSample> first_failure;
  std::size_t residual_nonzeros = 0;
};
/// (R(y,z)⊗1)(1⊗R(x,z))(R(x,y)⊗1) = (1⊗R(x,y))(R(x,z)⊗1)(1⊗R(y,z)) on 512 dimensions.
YbeResult verify_yang_baxter(const RMatrix& R, const std::vector<YbeSample>& samples, unsigned jobs = 1);
/// Exact in q: the residual in u = x/y, v = y/z has degree at most 2d in
/// each variable, so it vanishes iff it vanishes on a (2d+1)^2 grid with
/// q kept symbolic.
YbeResult verify_yang_baxter_symbolic(const RMatrix& R, unsigned jobs = 1);

}  // namespace d43
