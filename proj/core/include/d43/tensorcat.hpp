#pragma once

// Tensor products of crystals, the shifted crystals T_λ ⊗ B ⊗ T_μ, colored
// connected components, and the walk that joins any b ⊗ b' of B_l ⊗ B_l to
// φ ⊗ φ.
//
// A crystal here is any type with
//   Element, e(i,b), f(i,b) -> optional<Element>, eps(i,b), phi(i,b), wt(b).

#include "d43/affine.hpp"
#include "d43/weight.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace d43 {

/// Bit mask over colors {0,1,2}.
using ArrowSet = unsigned;
constexpr ArrowSet kAllArrows = 0b111;
inline constexpr bool has_arrow(ArrowSet s, int i) { return (s >> i) & 1u; }
/// Parse a string like "012" or "01".
ArrowSet parse_arrows(const std::string& digits);

template <class C1, class C2>
class TensorCrystal {
 public:
  using Element = std::pair<typename C1::Element, typename C2::Element>;
  using Maybe = std::optional<Element>;

  TensorCrystal(C1 a, C2 b) : a_(std::move(a)), b_(std::move(b)) {}
  const C1& left() const { return a_; }
  const C2& right() const { return b_; }

  Maybe f(int i, const Element& x) const {
    if (a_.phi(i, x.first) > b_.eps(i, x.second)) {
      auto y = a_.f(i, x.first);
      if (!y) return std::nullopt;
      return Element{*y, x.second};
    }
    auto y = b_.f(i, x.second);
    if (!y) return std::nullopt;
    return Element{x.first, *y};
  }

  Maybe e(int i, const Element& x) const {
    if (a_.phi(i, x.first) >= b_.eps(i, x.second)) {
      auto y = a_.e(i, x.first);
      if (!y) return std::nullopt;
      return Element{*y, x.second};
    }
    auto y = b_.e(i, x.second);
    if (!y) return std::nullopt;
    return Element{x.first, *y};
  }

  long eps(int i, const Element& x) const {
    const long d = b_.eps(i, x.second) - a_.phi(i, x.first);
    return a_.eps(i, x.first) + (d > 0 ? d : 0);
  }

  long phi(int i, const Element& x) const {
    const long d = a_.phi(i, x.first) - b_.eps(i, x.second);
    return b_.phi(i, x.second) + (d > 0 ? d : 0);
  }

  ClWeight wt(const Element& x) const { return a_.wt(x.first) + b_.wt(x.second); }

 private:
  C1 a_;
  C2 b_;
};

/// T_λ ⊗ B ⊗ T_μ. Elements are those of B; only ε, φ and wt move.
template <class C>
class ShiftedCrystal {
 public:
  using Element = typename C::Element;
  using Maybe = std::optional<Element>;

  ShiftedCrystal(C base, ClWeight lambda, ClWeight mu) : base_(std::move(base)), lambda_(lambda), mu_(mu) {}
  const C& base() const { return base_; }
  const ClWeight& lambda() const { return lambda_; }
  const ClWeight& mu() const { return mu_; }

  Maybe e(int i, const Element& b) const { return base_.e(i, b); }
  Maybe f(int i, const Element& b) const { return base_.f(i, b); }
  long eps(int i, const Element& b) const { return base_.eps(i, b) - lambda_.pair(i); }
  long phi(int i, const Element& b) const { return base_.phi(i, b) + mu_.pair(i); }
  ClWeight wt(const Element& b) const { return lambda_ + mu_ + base_.wt(b); }

 private:
  C base_;
  ClWeight lambda_;
  ClWeight mu_;
};

inline TensorCrystal<AffineCrystal, AffineCrystal> tensor_square(long l) {
  return {AffineCrystal(Finite{l}), AffineCrystal(Finite{l})};
}

/// All pairs of a vertex list, in lexicographic order.
template <class E>
std::vector<std::pair<E, E>> tensor_vertices(const std::vector<E>& a, const std::vector<E>& b) {
  std::vector<std::pair<E, E>> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.emplace_back(x, y);
  return out;
}

struct Partition {
  /// component_of[v] for each vertex index.
  std::vector<std::size_t> component_of;
  /// Vertex indices of each component, in order of first appearance.
  std::vector<std::vector<std::size_t>> members;
  std::size_t count() const { return members.size(); }
};

/// Undirected reachability using only the selected colors. Every arrow must
/// stay inside the vertex set; an arrow leaving it throws std::logic_error.
template <class C>
Partition connected_components(const C& crystal, const std::vector<typename C::Element>& vertices, ArrowSet arrows) {
  std::map<typename C::Element, std::size_t> index;
  for (std::size_t k = 0; k < vertices.size(); ++k) index.emplace(vertices[k], k);
  if (index.size() != vertices.size()) throw std::invalid_argument("connected_components: repeated vertex");

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  Partition p;
  p.component_of.assign(vertices.size(), kUnseen);
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < vertices.size(); ++start) {
    if (p.component_of[start] != kUnseen) continue;
    const std::size_t comp = p.members.size();
    p.members.emplace_back();
    p.component_of[start] = comp;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      p.members[comp].push_back(v);
      for (int i = 0; i < 3; ++i) {
        if (!has_arrow(arrows, i)) continue;
        for (const auto& next : {crystal.f(i, vertices[v]), crystal.e(i, vertices[v])}) {
          if (!next) continue;
          auto it = index.find(*next);
          if (it == index.end()) throw std::logic_error("connected_components: arrow leaves the vertex set");
          if (p.component_of[it->second] == kUnseen) {
            p.component_of[it->second] = comp;
            queue.push_back(it->second);
          }
        }
      }
    }
  }
  return p;
}

using TensorElem = std::pair<CrystalElement, CrystalElement>;

/// γ(b) = m + (φ0(b) - l + m)_+.
long gamma_of(const CrystalElement& b, long m, long l);
/// 1̄^m = (0,0,0,0,0,m).
CrystalElement bar_one_power(long m);
/// f0^{γ(b)} (b ⊗ 1̄^m) == f0^{γ(b)-m}(b) ⊗ φ in B_l ⊗ B_l.
bool gamma_identity_holds(const CrystalElement& b, long m, long l);

struct WalkResult {
  bool reached = false;
  long m = 0;
  long gamma = 0;
  long m_prime = 0;
  std::size_t steps = 0;
  TensorElem end;
  std::string failure;  ///< empty when reached
};

/// The deterministic walk: saturate with f1,f2; f0^γ; saturate; f0^{m'}.
WalkResult vacuum_walk(const TensorElem& start, long l);

}  // namespace d43
