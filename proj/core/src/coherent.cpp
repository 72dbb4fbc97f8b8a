#include "d43/coherent.hpp"

#include <set>
#include <stdexcept>

namespace d43 {

namespace {

void check_minimal(long l, const MinimalElement& b0) {
  if (l < 1 || b0.alpha < 0 || b0.beta < 0 || 2 * b0.alpha + 3 * b0.beta > l)
    throw std::invalid_argument("not a minimal element of B_l");
}

InfElement shift_down(const MinimalElement& b0, const CrystalElement& b) {
  InfElement nu = b;
  nu[X1] -= b0.alpha;
  nu[XB1] -= b0.alpha;
  for (int k : {X2, X3, XB3, XB2}) nu[k] -= b0.beta;
  return nu;
}

}  // namespace

ShiftedCrystal<AffineCrystal> embedding_source(long l, const MinimalElement& b0) {
  check_minimal(l, b0);
  const LevelCtx ctx = Finite{l};
  const auto e = b0.element();
  return {AffineCrystal(ctx), eps_weight(e, ctx), -phi_weight(e, ctx)};
}

InfElement f_embed(long l, const MinimalElement& b0, const ShiftedCrystal<AffineCrystal>& source,
                   const CrystalElement& b) {
  check_minimal(l, b0);
  const LevelCtx ctx = Finite{l};
  if (source.base().ctx() != ctx) throw std::invalid_argument("f_embed: source is not built on B_l");
  const auto e = b0.element();
  if (source.lambda() != eps_weight(e, ctx) || source.mu() != -phi_weight(e, ctx))
    throw std::invalid_argument("f_embed: shift weights must be eps(b0) and -phi(b0)");
  require_valid(b, ctx);
  return shift_down(b0, b);
}

InfElement f_embed(long l, const MinimalElement& b0, const CrystalElement& b) {
  return f_embed(l, b0, embedding_source(l, b0), b);
}

EmbeddingReport verify_embedding(long l, const MinimalElement& b0) {
  const auto src = embedding_source(l, b0);
  const auto inf = limit_crystal();
  EmbeddingReport r;
  auto fail = [&](const std::string& what) {
    if (r.first_failure.empty()) r.first_failure = what;
  };
  if (f_embed(l, b0, src, b0.element()) != kBInfinity) fail("b0 does not map to b_infinity");
  std::set<InfElement> images;
  for (const auto& b : enumerate_Bl(l)) {
    ++r.checked;
    const InfElement nu = f_embed(l, b0, src, b);
    if (!images.insert(nu).second) fail("not injective at " + b.str());
    if (src.wt(b) != inf.wt(nu)) fail("wt differs at " + b.str());
    for (int i = 0; i < 3; ++i) {
      const std::string where = b.str() + " color " + std::to_string(i);
      if (src.eps(i, b) != inf.eps(i, nu) || src.phi(i, b) != inf.phi(i, nu)) fail("eps/phi differ at " + where);
      if (auto fb = src.f(i, b); fb && f_embed(l, b0, src, *fb) != *inf.f(i, nu)) fail("f does not commute at " + where);
      if (auto eb = src.e(i, b); eb && f_embed(l, b0, src, *eb) != *inf.e(i, nu)) fail("e does not commute at " + where);
    }
  }
  r.pass = r.first_failure.empty();
  return r;
}

namespace {

std::optional<CoverWitness> find_witness(const InfElement& nu, long l_max) {
  for (long l = 1; l <= l_max; ++l)
    for (const auto& b0 : minimal_elements(l)) {
      CrystalElement x = nu;
      x[X1] += b0.alpha;
      x[XB1] += b0.alpha;
      for (int k : {X2, X3, XB3, XB2}) x[k] += b0.beta;
      if (is_valid(x, Finite{l}) && f_embed(l, b0, x) == nu) return CoverWitness{nu, l, b0};
    }
  return std::nullopt;
}

}  // namespace

CoverReport verify_cover(long radius, long l_max) {
  if (radius < 0) throw std::invalid_argument("verify_cover: negative radius");
  CoverReport r;
  r.radius = radius;
  r.l_max = l_max > 0 ? l_max : std::max(1L, 10 * radius);
  const long n = 2 * radius + 1;
  long total = 1;
  for (int k = 0; k < 6; ++k) total *= n;
  for (long code = 0; code < total; ++code) {
    InfElement nu;
    long c = code;
    for (int k = 0; k < 6; ++k) {
      nu[k] = c % n - radius;
      c /= n;
    }
    if (!parity_ok(nu)) continue;
    ++r.elements;
    auto w = find_witness(nu, r.l_max);
    if (!w) w = find_witness(nu, 2 * r.l_max);
    if (w)
      r.witnesses.push_back(*w);
    else
      r.uncovered.push_back(nu);
  }
  r.pass = r.uncovered.empty();
  return r;
}

}  // namespace d43
