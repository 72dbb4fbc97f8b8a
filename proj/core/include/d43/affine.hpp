#pragma once

// The affine crystals B_l, B_{>=0} and B_infinity: the 0-action, ε0/φ0,
// classical weights and enumeration.

#include "d43/g2crystal.hpp"
#include "d43/weight.hpp"

#include <array>
#include <optional>
#include <vector>

namespace d43 {

struct ZVec {
  long z1, z2, z3, z4;
};

using AList = std::array<long, 6>;

ZVec zvec(const CrystalElement& b);
AList alist(const ZVec& z);
inline AList alist(const CrystalElement& b) { return alist(zvec(b)); }
long max_a(const AList& a);

/// Smallest index (1-based) attaining max A.
int f_case(const CrystalElement& b);
/// Largest index (1-based) attaining max A.
int e_case(const CrystalElement& b);

/// Apply the coordinate update of the k-th lowering (resp. raising) rule, no checks.
CrystalElement apply_F(int k, const CrystalElement& b);
CrystalElement apply_E(int k, const CrystalElement& b);

MaybeElement f0(const CrystalElement& b, const LevelCtx& ctx);
MaybeElement e0(const CrystalElement& b, const LevelCtx& ctx);
/// Throws std::domain_error for NonNegativeUnbounded, where no finite level is available.
long eps0(const CrystalElement& b, const LevelCtx& ctx);
long phi0(const CrystalElement& b, const LevelCtx& ctx);

/// Colors 0, 1, 2.
MaybeElement e(int i, const CrystalElement& b, const LevelCtx& ctx);
MaybeElement f(int i, const CrystalElement& b, const LevelCtx& ctx);
long eps(int i, const CrystalElement& b, const LevelCtx& ctx);
long phi(int i, const CrystalElement& b, const LevelCtx& ctx);
/// Σ ε_i Λ_i and Σ φ_i Λ_i.
ClWeight eps_weight(const CrystalElement& b, const LevelCtx& ctx);
ClWeight phi_weight(const CrystalElement& b, const LevelCtx& ctx);
ClWeight weight(const CrystalElement& b, const LevelCtx& ctx);

/// f_i^n b (or e_i^n b); absent as soon as one step is absent.
MaybeElement f_pow(int i, long n, const CrystalElement& b, const LevelCtx& ctx);
MaybeElement e_pow(int i, long n, const CrystalElement& b, const LevelCtx& ctx);
MaybeElement f_pow(int i, long n, const MaybeElement& b, const LevelCtx& ctx);
MaybeElement e_pow(int i, long n, const MaybeElement& b, const LevelCtx& ctx);

/// B_l as the union of B^{G2}(jΛ1) for j = 0..l, lexicographic order.
std::vector<CrystalElement> enumerate_Bl(long l);
/// (l+1)(l+2)(l+3)^2(l+4)(l+5)/360.
long bl_cardinality(long l);

/// (x1,x2,x3,x̄3,x̄2,x̄1) -> (x̄1,x̄2,x̄3,x3,x2,x1).
CrystalElement involution(const CrystalElement& b);

/// The crystal structure on one context, usable wherever a crystal is expected.
class AffineCrystal {
 public:
  using Element = CrystalElement;
  explicit AffineCrystal(LevelCtx ctx) : ctx_(ctx) {}

  const LevelCtx& ctx() const { return ctx_; }
  bool contains(const CrystalElement& b) const { return is_valid(b, ctx_); }
  MaybeElement e(int i, const CrystalElement& b) const { return d43::e(i, b, ctx_); }
  MaybeElement f(int i, const CrystalElement& b) const { return d43::f(i, b, ctx_); }
  long eps(int i, const CrystalElement& b) const { return d43::eps(i, b, ctx_); }
  long phi(int i, const CrystalElement& b) const { return d43::phi(i, b, ctx_); }
  ClWeight wt(const CrystalElement& b) const { return weight(b, ctx_); }

 private:
  LevelCtx ctx_;
};

/// Power series check: Σ_{j<=l} |B^{G2}(jΛ1)| against the t^l coefficient of (1+t)/(1-t)^7.
struct DimensionRow {
  long l;
  long enumerated;
  long series;
};
std::vector<DimensionRow> dimension_identity(long l_max);

}  // namespace d43
