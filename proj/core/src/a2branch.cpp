#include "d43/a2branch.hpp"

#include "d43/tensorcat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace d43 {

namespace {

long pos(long v) { return v > 0 ? v : 0; }

A2Tab with(const A2Tab& t, long p, long q, long r) { return {t.j0, t.j1, p, q, r}; }

void check_a2_color(int i) {
  if (i != 0 && i != 1) throw std::invalid_argument("A2 color must be 0 or 1");
}

}  // namespace

std::string A2Tab::str() const {
  std::ostringstream os;
  os << "t(" << p << "," << q << "," << r << ")[" << j0 << "," << j1 << "]";
  return os.str();
}

bool a2_condition(const A2Tab& t) {
  return t.j0 >= 0 && t.j1 >= 0 && 0 <= t.p && t.p <= t.j0 && t.p <= t.q && t.q <= t.j1 + t.p && 0 <= t.r &&
         t.r <= t.j0 + t.q - 2 * t.p;
}

MaybeTab a2_e0(const A2Tab& t) {
  if (t.r > 0) return with(t, t.p, t.q, t.r - 1);
  return std::nullopt;
}

MaybeTab a2_e1(const A2Tab& t) {
  const long d = t.p - t.q + t.r;
  if (d < 0) return with(t, t.p, t.q - 1, t.r);
  if (t.p > 0) return with(t, t.p - 1, t.q - 1, t.r + 1);
  return std::nullopt;
}

MaybeTab a2_f0(const A2Tab& t) {
  if (t.r < t.j0 + t.q - 2 * t.p) return with(t, t.p, t.q, t.r + 1);
  return std::nullopt;
}

MaybeTab a2_f1(const A2Tab& t) {
  if (t.p <= t.q && t.q < t.p + t.r) return with(t, t.p + 1, t.q + 1, t.r - 1);
  if (t.q < t.j1 + t.p) return with(t, t.p, t.q + 1, t.r);
  return std::nullopt;
}

A2EpsPhi a2_eps_phi(const A2Tab& t) {
  return {t.r, t.p + pos(t.q - t.p - t.r), t.j0 - 2 * t.p + t.q - t.r, pos(t.p - t.q + t.r) + t.j1 + t.p - t.q};
}

Raise a2_raise(const A2Tab& t) {
  if (!a2_condition(t)) throw std::invalid_argument("a2_raise: " + t.str() + " violates (C)");
  return {t.j1 - t.q + t.p, t.j0 + t.j1 - t.q, t.j0 + t.q - 2 * t.p - t.r};
}

A2Tab a2_lowest(long j0, long j1) { return {j0, j1, j0, j0 + j1, j1}; }
A2Tab a2_highest(long j0, long j1) { return {j0, j1, 0, 0, 0}; }

std::vector<A2Tab> enumerate_a2(long j0, long j1) {
  if (j0 < 0 || j1 < 0) throw std::invalid_argument("enumerate_a2: negative highest weight");
  std::vector<A2Tab> out;
  for (long p = 0; p <= j0; ++p)
    for (long q = p; q <= j1 + p; ++q)
      for (long r = 0; r <= j0 + q - 2 * p; ++r) out.push_back({j0, j1, p, q, r});
  return out;
}

long a2_cardinality(long j0, long j1) { return (1 + j0) * (1 + j1) * (2 + j0 + j1) / 2; }

MaybeTab A2Crystal::e(int i, const A2Tab& t) const {
  check_a2_color(i);
  return i == 0 ? a2_e0(t) : a2_e1(t);
}

MaybeTab A2Crystal::f(int i, const A2Tab& t) const {
  check_a2_color(i);
  return i == 0 ? a2_f0(t) : a2_f1(t);
}

long A2Crystal::eps(int i, const A2Tab& t) const {
  check_a2_color(i);
  const auto v = a2_eps_phi(t);
  return i == 0 ? v.eps0 : v.eps1;
}

long A2Crystal::phi(int i, const A2Tab& t) const {
  check_a2_color(i);
  const auto v = a2_eps_phi(t);
  return i == 0 ? v.phi0 : v.phi1;
}

std::string ComponentIndex::str() const {
  std::ostringstream os;
  os << "(l=" << l << ",i=" << i << ",j0=" << j0 << ",j1=" << j1 << ")";
  return os.str();
}

bool index_valid(const ComponentIndex& c) {
  if (c.l < 0 || c.i < 0 || 2 * c.i > c.l) return false;
  for (long j : {c.j0, c.j1}) {
    if (j < c.i || j > c.l - c.i) return false;
    if ((c.l - c.i - j) % 3 != 0) return false;
  }
  return true;
}

std::vector<ComponentIndex> index_set(long l) {
  std::vector<ComponentIndex> out;
  for (long i = 0; 2 * i <= l; ++i)
    for (long j0 = i; j0 <= l - i; ++j0)
      for (long j1 = i; j1 <= l - i; ++j1) {
        ComponentIndex c{l, i, j0, j1};
        if (index_valid(c)) out.push_back(c);
      }
  return out;
}

CrystalElement bbar(const ComponentIndex& c) {
  if (!index_valid(c)) throw std::invalid_argument("bbar: invalid index " + c.str());
  const long y0 = c.y0(), y1 = c.y1(), i = c.i;
  CrystalElement b = c.j0 <= c.j1 ? CrystalElement{{0, y1, -2 * y1 + 3 * y0 + i, y0 + i, y0 + c.j0, 0}}
                                  : CrystalElement{{0, y0, y0 + i, 2 * y1 - y0 + i, -y1 + 2 * y0 + c.j0, 0}};
  if (!is_01_highest(b, Finite{c.l})) throw std::logic_error("bbar: element " + b.str() + " is not {0,1}-highest");
  return b;
}

bool is_01_highest(const CrystalElement& b, const LevelCtx& ctx) {
  return is_valid(b, ctx) && !e(0, b, ctx) && !e(1, b, ctx);
}

MaybeElement component_image(const ComponentIndex& c, long p, long q, long r, const LevelCtx& ctx) {
  MaybeElement x = bbar(c);
  x = f_pow(0, p, x, ctx);
  x = f_pow(1, q, x, ctx);
  return f_pow(0, r, x, ctx);
}

bool DecompositionReport::ok() const {
  if (!problems.empty()) return false;
  for (const auto& c : components)
    if (!c.isomorphic || c.size != c.expected_size) return false;
  return true;
}

namespace {

// Checks that t -> f0^r f1^q f0^p b̄ is a {0,1}-crystal isomorphism onto the
// component `members`; returns an empty string on success.
std::string check_isomorphism(const ComponentIndex& c, const std::set<CrystalElement>& members) {
  const LevelCtx ctx = Finite{c.l};
  const A2Crystal a2(c.j0, c.j1);
  std::map<A2Tab, CrystalElement> image;
  std::set<CrystalElement> seen;
  for (const auto& t : enumerate_a2(c.j0, c.j1)) {
    auto x = component_image(c, t.p, t.q, t.r, ctx);
    if (!x) return "image of " + t.str() + " is absent";
    if (!members.count(*x)) return "image of " + t.str() + " leaves the component";
    if (!seen.insert(*x).second) return "two tableaux map to " + x->str();
    image.emplace(t, *x);
  }
  if (seen.size() != members.size()) return "map is not onto the component";
  for (const auto& [t, x] : image) {
    for (int a = 0; a < 2; ++a) {
      if (a2.eps(a, t) != eps(a, x, ctx) || a2.phi(a, t) != phi(a, x, ctx))
        return "eps/phi mismatch at " + t.str() + " color " + std::to_string(a);
      const auto ft = a2.f(a, t);
      const auto fx = f(a, x, ctx);
      if (ft.has_value() != fx.has_value() || (ft && image.at(*ft) != *fx))
        return "f" + std::to_string(a) + " mismatch at " + t.str();
      const auto et = a2.e(a, t);
      const auto ex = e(a, x, ctx);
      if (et.has_value() != ex.has_value() || (et && image.at(*et) != *ex))
        return "e" + std::to_string(a) + " mismatch at " + t.str();
    }
  }
  return {};
}

}  // namespace

DecompositionReport decompose(long l) {
  if (l < 1) throw std::invalid_argument("decompose: l must be positive");
  DecompositionReport rep;
  rep.l = l;
  const LevelCtx ctx = Finite{l};
  const auto vertices = enumerate_Bl(l);
  rep.total = vertices.size();
  const auto part = connected_components(AffineCrystal(ctx), vertices, 0b011);
  rep.components_found = part.count();

  std::map<CrystalElement, ComponentIndex> by_bbar;
  for (const auto& c : index_set(l)) by_bbar.emplace(bbar(c), c);
  if (by_bbar.size() != index_set(l).size()) rep.problems.push_back("distinct indices share a b̄ element");

  std::set<ComponentIndex> matched;
  for (const auto& comp : part.members) {
    std::vector<CrystalElement> highest;
    std::set<CrystalElement> members;
    for (auto v : comp) {
      members.insert(vertices[v]);
      if (is_01_highest(vertices[v], ctx)) highest.push_back(vertices[v]);
    }
    if (highest.size() != 1) {
      rep.problems.push_back("component of " + vertices[comp.front()].str() + " has " +
                             std::to_string(highest.size()) + " {0,1}-highest elements");
      continue;
    }
    auto it = by_bbar.find(highest.front());
    if (it == by_bbar.end()) {
      rep.problems.push_back("highest element " + highest.front().str() + " is not a b̄");
      continue;
    }
    const ComponentIndex& c = it->second;
    matched.insert(c);
    ComponentReport cr;
    cr.index = c;
    cr.size = comp.size();
    cr.expected_size = static_cast<std::size_t>(a2_cardinality(c.j0, c.j1));
    cr.detail = check_isomorphism(c, members);
    cr.isomorphic = cr.detail.empty();
    rep.components.push_back(cr);
  }
  for (const auto& c : index_set(l))
    if (!matched.count(c)) rep.problems.push_back("index " + c.str() + " has no component");
  std::sort(rep.components.begin(), rep.components.end(),
            [](const ComponentReport& a, const ComponentReport& b) { return a.index < b.index; });
  return rep;
}

}  // namespace d43
