#pragma once

// The eight-dimensional representation V^1 of U'_q(D4^(3)), its
// polarization, the spectral twist and the tensor square.

#include "d43/exactalg/matrix.hpp"
#include "d43/exactalg/sparse.hpp"
#include "d43/weight.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace d43 {

/// Basis positions in the order 1, 2, 3, 0, 3b, 2b, 1b, phi.
enum V1Basis : int { V1 = 0, V2, V3, V0, V3B, V2B, V1B, VPHI };
inline constexpr int kRepDim = 8;
inline constexpr int kTensorDim = 64;

/// "1", "2", "3", "0", "3b", "2b", "1b", "phi".
const std::string& basis_label(int k);

struct Rep8 {
  std::array<Matrix<QRat>, 3> E, F, T, Tinv;
  std::array<ClWeight, kRepDim> weight;
};

Rep8 build_v1();

/// Matrix entries and the Gram matrix lie in A_Z[q^-1]: after removing the
/// power of q, the denominator is ±1 at q = 0.
bool integral_at_zero(const QRat& v);
bool integral_at_zero(const Matrix<QRat>& m);

struct RelationCheck {
  std::string name;
  bool pass = false;
  /// Number of nonzero entries of the residual.
  std::size_t residual_nonzeros = 0;
  std::string residual;
};
std::vector<RelationCheck> check_defining_relations(const Rep8& rep);
inline bool all_pass(const std::vector<RelationCheck>& v) {
  for (const auto& c : v)
    if (!c.pass) return false;
  return true;
}

/// The symmetric form with the twisted adjointness properties, (v1,v1) = 1,
/// v_phi orthogonal to the rest and (v_phi,v_phi) = q[3]/[2]. Throws
/// std::logic_error if the normalized system is inconsistent or not unique.
Matrix<QRat> build_polarization(const Rep8& rep);
/// The list of adjointness identities checked for a Gram matrix.
std::vector<RelationCheck> check_polarization(const Rep8& rep, const Matrix<QRat>& gram);

/// V^1 with e_0 scaled by a spectral variable and f_0 by its inverse.
/// `variable` is 0 for x and 1 for y.
struct SpectralRep {
  const Rep8* rep = nullptr;
  int variable = 0;
};

/// Generator actions on a 64-dimensional tensor product; index 8a + b for v_a ⊗ v_b.
template <class S>
struct TensorRep {
  std::array<SparseMatrix<S>, 3> E, F, T, Tinv;
};

/// Lower coproduct Δe = e⊗t^-1 + 1⊗e, Δf = f⊗1 + t⊗f on V^1_x ⊗ V^1_y.
TensorRep<LPoly2> tensor_rep(const SpectralRep& a, const SpectralRep& b);
/// The same without spectral parameters.
TensorRep<QRat> tensor_rep(const Rep8& rep);

using TensorVec = std::vector<QRat>;
using SpectralVec = std::vector<LPoly2>;

inline std::size_t tensor_index(int a, int b) { return static_cast<std::size_t>(kRepDim * a + b); }

enum class HighestLabel { L2La1, La2, La1_1, La1_2, La1_3, Zero_1, Zero_2 };
struct HighestVector {
  HighestLabel label;
  std::string name;
  TensorVec vec;
  /// Classical weight of the component.
  ClWeight weight;
};
/// u_{2Λ1}, u_{Λ2}, u_{Λ1}^(1..3), u_0^(1..2), in this order.
std::vector<HighestVector> highest_vectors();
/// Each listed vector is a weight vector of its weight killed by Δe1 and Δe2.
std::vector<RelationCheck> check_highest_vectors(const Rep8& rep);

struct LoweringIdentity {
  int number = 0;
  std::string lhs;
  /// Word applied right to left: each entry is a colour; index 0 means f_0.
  std::vector<int> word;
  HighestLabel source;
  LPoly2 expected;
};
/// The fourteen identities of the form f-word · u = c(x,y) u_{2Λ1}.
const std::vector<LoweringIdentity>& lowering_identities();

struct LoweringResult {
  int number = 0;
  bool pass = false;
  /// c(x,y) computed from the tensor action, if the image is a multiple of u_{2Λ1}.
  std::optional<LPoly2> computed;
  std::string difference;
};
std::vector<LoweringResult> verify_lowering_identities(const Rep8& rep);
/// Apply a lowering word (right to left) in V^1_x ⊗ V^1_y.
SpectralVec apply_word(const TensorRep<LPoly2>& t, const std::vector<int>& word, SpectralVec v);
/// Coefficient c with v = c · v1⊗v1, or nullopt.
std::optional<LPoly2> multiple_of_vacuum(const SpectralVec& v);

SpectralVec lift(const TensorVec& v);

}  // namespace d43
