#include "d43/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace d43 {

namespace {

MaybeElement checked(const CrystalElement& b, const LevelCtx& ctx) {
  if (is_valid(b, ctx)) return b;
  return std::nullopt;
}

long level_of(const LevelCtx& ctx) {
  if (const auto* f = std::get_if<Finite>(&ctx)) return f->l;
  if (std::holds_alternative<FreeIntegral>(ctx)) return 0;
  throw std::domain_error("eps0/phi0 are not defined on the unbounded nonnegative crystal");
}

void check_color(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("color must be 0, 1 or 2");
}

}  // namespace

ZVec zvec(const CrystalElement& b) {
  if (!parity_ok(b)) throw std::invalid_argument("zvec: x3 and x̄3 differ in parity");
  return {b[XB1] - b[X1], b[XB2] - b[XB3], b[X3] - b[X2], (b[XB3] - b[X3]) / 2};
}

AList alist(const ZVec& z) {
  return {0,
          z.z1,
          z.z1 + z.z2,
          z.z1 + z.z2 + 3 * z.z4,
          z.z1 + z.z2 + z.z3 + 3 * z.z4,
          2 * z.z1 + z.z2 + z.z3 + 3 * z.z4};
}

long max_a(const AList& a) { return *std::max_element(a.begin(), a.end()); }

int f_case(const CrystalElement& b) {
  const AList a = alist(b);
  return static_cast<int>(std::max_element(a.begin(), a.end()) - a.begin()) + 1;
}

int e_case(const CrystalElement& b) {
  const AList a = alist(b);
  const long m = max_a(a);
  for (int k = 5; k >= 0; --k)
    if (a[k] == m) return k + 1;
  return 1;
}

CrystalElement apply_F(int k, const CrystalElement& b) {
  CrystalElement r = b;
  switch (k) {
    case 1: ++r[X1]; break;
    case 2: ++r[X3]; ++r[XB3]; --r[XB1]; break;
    case 3: r[X3] += 2; --r[XB2]; break;
    case 4: ++r[X2]; r[XB3] -= 2; break;
    case 5: ++r[X1]; --r[X3]; --r[XB3]; break;
    case 6: --r[XB1]; break;
    default: throw std::invalid_argument("apply_F: case must be 1..6");
  }
  return r;
}

CrystalElement apply_E(int k, const CrystalElement& b) {
  CrystalElement r = b;
  switch (k) {
    case 1: --r[X1]; break;
    case 2: --r[X3]; --r[XB3]; ++r[XB1]; break;
    case 3: r[X3] -= 2; ++r[XB2]; break;
    case 4: --r[X2]; r[XB3] += 2; break;
    case 5: --r[X1]; ++r[X3]; ++r[XB3]; break;
    case 6: ++r[XB1]; break;
    default: throw std::invalid_argument("apply_E: case must be 1..6");
  }
  return r;
}

MaybeElement f0(const CrystalElement& b, const LevelCtx& ctx) { return checked(apply_F(f_case(b), b), ctx); }
MaybeElement e0(const CrystalElement& b, const LevelCtx& ctx) { return checked(apply_E(e_case(b), b), ctx); }

long phi0(const CrystalElement& b, const LevelCtx& ctx) { return level_of(ctx) - s(b) + max_a(alist(b)); }

long eps0(const CrystalElement& b, const LevelCtx& ctx) {
  const ZVec z = zvec(b);
  return phi0(b, ctx) - (2 * z.z1 + z.z2 + z.z3 + 3 * z.z4);
}

MaybeElement e(int i, const CrystalElement& b, const LevelCtx& ctx) {
  check_color(i);
  return i == 0 ? e0(b, ctx) : g2_e(i, b, ctx);
}

MaybeElement f(int i, const CrystalElement& b, const LevelCtx& ctx) {
  check_color(i);
  return i == 0 ? f0(b, ctx) : g2_f(i, b, ctx);
}

long eps(int i, const CrystalElement& b, const LevelCtx& ctx) {
  check_color(i);
  return i == 0 ? eps0(b, ctx) : g2_eps(i, b);
}

long phi(int i, const CrystalElement& b, const LevelCtx& ctx) {
  check_color(i);
  return i == 0 ? phi0(b, ctx) : g2_phi(i, b);
}

ClWeight eps_weight(const CrystalElement& b, const LevelCtx& ctx) {
  return {eps0(b, ctx), g2_eps(1, b), g2_eps(2, b)};
}

ClWeight phi_weight(const CrystalElement& b, const LevelCtx& ctx) {
  return {phi0(b, ctx), g2_phi(1, b), g2_phi(2, b)};
}

ClWeight weight(const CrystalElement& b, const LevelCtx& ctx) { return phi_weight(b, ctx) - eps_weight(b, ctx); }

MaybeElement f_pow(int i, long n, const MaybeElement& b, const LevelCtx& ctx) {
  MaybeElement cur = b;
  for (long k = 0; k < n && cur; ++k) cur = f(i, *cur, ctx);
  return cur;
}

MaybeElement e_pow(int i, long n, const MaybeElement& b, const LevelCtx& ctx) {
  MaybeElement cur = b;
  for (long k = 0; k < n && cur; ++k) cur = e(i, *cur, ctx);
  return cur;
}

MaybeElement f_pow(int i, long n, const CrystalElement& b, const LevelCtx& ctx) {
  return f_pow(i, n, MaybeElement(b), ctx);
}

MaybeElement e_pow(int i, long n, const CrystalElement& b, const LevelCtx& ctx) {
  return e_pow(i, n, MaybeElement(b), ctx);
}

std::vector<CrystalElement> enumerate_Bl(long l) {
  if (l < 0) throw std::invalid_argument("enumerate_Bl: l must be nonnegative");
  std::vector<CrystalElement> out;
  for (long j = 0; j <= l; ++j) {
    auto part = enumerate_g2(j);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

long bl_cardinality(long l) { return (l + 1) * (l + 2) * (l + 3) * (l + 3) * (l + 4) * (l + 5) / 360; }

CrystalElement involution(const CrystalElement& b) {
  return {{b[XB1], b[XB2], b[XB3], b[X3], b[X2], b[X1]}};
}

std::vector<DimensionRow> dimension_identity(long l_max) {
  if (l_max < 0) throw std::invalid_argument("dimension_identity: l_max must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(l_max) + 1;
  // (1+t), then seven divisions by (1-t) as running sums.
  std::vector<long> series(n, 0);
  series[0] = 1;
  if (n > 1) series[1] = 1;
  for (int k = 0; k < 7; ++k)
    for (std::size_t m = 1; m < n; ++m) series[m] += series[m - 1];

  std::vector<DimensionRow> rows;
  long acc = 0;
  for (long l = 0; l <= l_max; ++l) {
    acc += static_cast<long>(enumerate_g2(l).size());
    rows.push_back({l, acc, series[static_cast<std::size_t>(l)]});
  }
  return rows;
}

}  // namespace d43
