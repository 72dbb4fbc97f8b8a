#pragma once

// The A2 tableau crystal B^{A2}(j0Λ0 + j1Λ1) with colors {0,1}, the
// distinguished {0,1}-highest elements b̄^{l,i}_{j0,j1} of B_l, and the
// decomposition of B_l into {0,1}-components.

#include "d43/affine.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace d43 {

/// t(p,q,r) = f0^r f1^q f0^p u in B^{A2}(j0Λ0 + j1Λ1).
struct A2Tab {
  long j0 = 0, j1 = 0;
  long p = 0, q = 0, r = 0;
  friend auto operator<=>(const A2Tab&, const A2Tab&) = default;
  std::string str() const;
};

/// 0 <= p <= j0, p <= q <= j1 + p, 0 <= r <= j0 + q - 2p.
bool a2_condition(const A2Tab& t);

using MaybeTab = std::optional<A2Tab>;
MaybeTab a2_e0(const A2Tab& t);
MaybeTab a2_e1(const A2Tab& t);
MaybeTab a2_f0(const A2Tab& t);
MaybeTab a2_f1(const A2Tab& t);

struct A2EpsPhi {
  long eps0, eps1, phi0, phi1;
  friend bool operator==(const A2EpsPhi&, const A2EpsPhi&) = default;
};
A2EpsPhi a2_eps_phi(const A2Tab& t);

struct Raise {
  long p, q, r;
  friend bool operator==(const Raise&, const Raise&) = default;
};
/// (p', q', r') with t(p,q,r) = e0^{r'} e1^{q'} e0^{p'} of the lowest element.
Raise a2_raise(const A2Tab& t);
A2Tab a2_lowest(long j0, long j1);
A2Tab a2_highest(long j0, long j1);
std::vector<A2Tab> enumerate_a2(long j0, long j1);
/// (1+j0)(1+j1)(2+j0+j1)/2.
long a2_cardinality(long j0, long j1);

/// B^{A2}(j0Λ0 + j1Λ1) as a crystal with colors 0 and 1.
class A2Crystal {
 public:
  using Element = A2Tab;
  A2Crystal(long j0, long j1) : j0_(j0), j1_(j1) {}
  MaybeTab e(int i, const A2Tab& t) const;
  MaybeTab f(int i, const A2Tab& t) const;
  long eps(int i, const A2Tab& t) const;
  long phi(int i, const A2Tab& t) const;
  long j0() const { return j0_; }
  long j1() const { return j1_; }

 private:
  long j0_, j1_;
};

struct ComponentIndex {
  long l = 0, i = 0, j0 = 0, j1 = 0;
  friend auto operator<=>(const ComponentIndex&, const ComponentIndex&) = default;
  long y0() const { return (l - i - j0) / 3; }
  long y1() const { return (l - i - j1) / 3; }
  std::string str() const;
};

bool index_valid(const ComponentIndex& c);
/// All (l,i,j0,j1) for fixed l, ordered by (i, j0, j1).
std::vector<ComponentIndex> index_set(long l);

/// b̄^{l,i}_{j0,j1}; throws std::invalid_argument for an invalid index.
CrystalElement bbar(const ComponentIndex& c);
inline CrystalElement bbar(long l, long i, long j0, long j1) { return bbar(ComponentIndex{l, i, j0, j1}); }

/// e0 and e1 both absent.
bool is_01_highest(const CrystalElement& b, const LevelCtx& ctx);

/// f0^r f1^q f0^p b̄ in the given context.
MaybeElement component_image(const ComponentIndex& c, long p, long q, long r, const LevelCtx& ctx);

struct ComponentReport {
  ComponentIndex index;
  std::size_t size = 0;
  std::size_t expected_size = 0;
  bool isomorphic = false;
  std::string detail;
};

struct DecompositionReport {
  long l = 0;
  std::size_t total = 0;
  std::size_t components_found = 0;
  std::vector<ComponentReport> components;
  std::vector<std::string> problems;
  bool ok() const;
};

/// {0,1}-components of B_l matched against the index set, with a full
/// isomorphism check for each.
DecompositionReport decompose(long l);

}  // namespace d43
