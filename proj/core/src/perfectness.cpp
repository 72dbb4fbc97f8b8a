#include "d43/perfectness.hpp"

#include <algorithm>
#include <stdexcept>

namespace d43 {

namespace {

long pos(long v) { return v > 0 ? v : 0; }

void require_level(long l) {
  if (l < 1) throw std::invalid_argument("level must be positive");
}

}  // namespace

std::vector<MinimalElement> minimal_elements(long l) {
  std::vector<MinimalElement> out;
  for (long a = 0; 2 * a <= l; ++a)
    for (long b = 0; 2 * a + 3 * b <= l; ++b) out.push_back({a, b});
  return out;
}

P1Result check_P1(long l) {
  require_level(l);
  const auto b = enumerate_Bl(l);
  const auto vertices = tensor_vertices(b, b);
  const auto part = connected_components(tensor_square(l), vertices, kAllArrows);
  P1Result r;
  r.vertices = vertices.size();
  r.components = part.count();
  r.pass = r.components == 1;
  if (!r.pass)
    for (const auto& m : part.members) r.representatives.push_back(vertices[m.front()]);
  return r;
}

std::optional<std::pair<long, long>> root_coefficients(const ClWeight& lambda0, const ClWeight& wt) {
  // λ0 - wt = n1 (-1, 2, -1) + n2 (0, -3, 2).
  const ClWeight d = lambda0 - wt;
  const long n1 = -d.m0;
  if ((d.m2 - d.m0) % 2 != 0) return std::nullopt;
  const long n2 = (d.m2 - d.m0) / 2;
  if (d.m1 != 2 * n1 - 3 * n2) return std::nullopt;
  return std::make_pair(n1, n2);
}

P2Result check_P2(long l) {
  require_level(l);
  const LevelCtx ctx = Finite{l};
  P2Result r;
  r.lambda0 = weight(CrystalElement{{l, 0, 0, 0, 0, 0}}, ctx);
  for (const auto& b : enumerate_Bl(l)) {
    const ClWeight w = weight(b, ctx);
    const auto n = root_coefficients(r.lambda0, w);
    if (!n || n->first < 0 || n->second < 0) r.offenders.push_back(b.str() + " wt " + w.str());
    if (w == r.lambda0) ++r.top_multiplicity;
  }
  r.pass = r.offenders.empty() && r.top_multiplicity == 1;
  return r;
}

P45Result check_P4_P5(long l) {
  require_level(l);
  const LevelCtx ctx = Finite{l};
  P45Result r;
  for (const auto& b : enumerate_Bl(l)) {
    const ClWeight ew = eps_weight(b, ctx);
    const ClWeight pw = phi_weight(b, ctx);
    if (ew.level() < l || pw.level() < l) r.problems.push_back("level below l at " + b.str());
    if (ew.level() == l) r.minimal.push_back(b);
    if ((ew.level() == l) != (pw.level() == l)) r.problems.push_back("eps/phi levels differ at " + b.str());
  }
  const auto expected = minimal_elements(l);
  std::vector<CrystalElement> want;
  for (const auto& m : expected) want.push_back(m.element());
  std::sort(want.begin(), want.end());
  auto found = r.minimal;
  std::sort(found.begin(), found.end());
  if (found != want) r.problems.push_back("minimal set differs from {(α,β,β,β,β,α) : 2α+3β <= l}");

  // ε and φ restricted to the minimal set are bijections onto the dominant
  // weights of level l.
  std::vector<ClWeight> dominant;
  for (long m1 = 0; 2 * m1 <= l; ++m1)
    for (long m2 = 0; 2 * m1 + 3 * m2 <= l; ++m2) dominant.push_back({l - 2 * m1 - 3 * m2, m1, m2});
  std::vector<ClWeight> eps_img, phi_img;
  for (const auto& m : expected) {
    const auto b = m.element();
    const ClWeight ew = eps_weight(b, ctx), pw = phi_weight(b, ctx);
    if (ew != m.weight(l) || pw != m.weight(l)) r.problems.push_back("eps/phi of " + b.str() + " is not " + m.weight(l).str());
    eps_img.push_back(ew);
    phi_img.push_back(pw);
  }
  std::sort(dominant.begin(), dominant.end());
  for (auto* img : {&eps_img, &phi_img}) {
    std::sort(img->begin(), img->end());
    if (*img != dominant)
      r.problems.push_back("restriction to minimal elements is not a bijection onto dominant level-l weights");
  }
  r.pass = r.problems.empty();
  return r;
}

long psi(long z1, long z2, long z3, long z4) {
  return max_a(alist(ZVec{z1, z2, z3, z4})) + 2 * pos(z3 + pos(z2)) + pos(3 * z4) - (z1 + z2 + 2 * z3 + 3 * z4);
}

PsiScan psi_scan(long radius) {
  if (radius < 0) throw std::invalid_argument("psi_scan: negative radius");
  PsiScan r;
  r.radius = radius;
  r.minimum = psi(0, 0, 0, 0);
  r.homogeneous = true;
  for (long a = -radius; a <= radius; ++a)
    for (long b = -radius; b <= radius; ++b)
      for (long c = -radius; c <= radius; ++c)
        for (long d = -radius; d <= radius; ++d) {
          const long v = psi(a, b, c, d);
          r.minimum = std::min(r.minimum, v);
          if (v == 0) ++r.zeros;
          if (v < 0) ++r.negatives;
          // Every fourth point is enough to probe homogeneity.
          if (((a + b + c + d) & 3) == 0)
            for (long t = 2; t <= 5; ++t)
              if (psi(t * a, t * b, t * c, t * d) != t * v) r.homogeneous = false;
        }
  r.pass = r.negatives == 0 && r.zeros == 1 && psi(0, 0, 0, 0) == 0 && r.homogeneous;
  return r;
}

bool psi_matches_level(long l) {
  require_level(l);
  const LevelCtx ctx = Finite{l};
  for (const auto& b : enumerate_Bl(l))
    if (psi(zvec(b)) != phi_weight(b, ctx).level() - l) return false;
  return true;
}

}  // namespace d43
