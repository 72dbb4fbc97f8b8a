#pragma once

// Perfectness of B_l: connectedness of B_l ⊗ B_l, the weight-top
// condition, the level bound, and the minimal elements.

#include "d43/tensorcat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace d43 {

/// m0 + 2 m1 + 3 m2.
inline long level_of(const ClWeight& w) { return w.level(); }

/// The element (α,β,β,β,β,α).
struct MinimalElement {
  long alpha = 0;
  long beta = 0;
  friend auto operator<=>(const MinimalElement&, const MinimalElement&) = default;
  CrystalElement element() const { return {{alpha, beta, beta, beta, beta, alpha}}; }
  /// (l - 2α - 3β) Λ0 + α Λ1 + β Λ2.
  ClWeight weight(long l) const { return {l - 2 * alpha - 3 * beta, alpha, beta}; }
};

/// All (α,β) with 2α + 3β <= l, ordered by (α, β).
std::vector<MinimalElement> minimal_elements(long l);

struct P1Result {
  bool pass = false;
  std::size_t vertices = 0;
  std::size_t components = 0;
  /// One vertex per component (only filled when there is more than one).
  std::vector<TensorElem> representatives;
};
P1Result check_P1(long l);

/// (n1, n2) with λ0 - wt = n1 α1 + n2 α2, if integral solutions exist.
std::optional<std::pair<long, long>> root_coefficients(const ClWeight& lambda0, const ClWeight& wt);

struct P2Result {
  bool pass = false;
  ClWeight lambda0;
  std::size_t top_multiplicity = 0;
  std::vector<std::string> offenders;
};
P2Result check_P2(long l);

struct P45Result {
  bool pass = false;
  std::vector<CrystalElement> minimal;  ///< elements with level(ε) = l, as found
  std::vector<std::string> problems;
};
P45Result check_P4_P5(long l);

/// max A + 2(z3 + (z2)_+)_+ + (3 z4)_+ - (z1 + z2 + 2 z3 + 3 z4).
long psi(long z1, long z2, long z3, long z4);
inline long psi(const ZVec& z) { return psi(z.z1, z.z2, z.z3, z.z4); }

struct PsiScan {
  bool pass = false;
  long radius = 0;
  long minimum = 0;
  std::size_t zeros = 0;
  std::size_t negatives = 0;
  /// ψ(t z) = t ψ(z) on the sampled points.
  bool homogeneous = false;
};
/// Scan [-radius, radius]^4 and sample homogeneity for t = 2..5.
PsiScan psi_scan(long radius);

/// ψ(z(b)) == level(φ(b)) - l for every b in B_l.
bool psi_matches_level(long l);

}  // namespace d43
