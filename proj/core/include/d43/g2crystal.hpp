#pragma once

// Six-coordinate elements b = (x1, x2, x3, x̄3, x̄2, x̄1) and the classical
// G2 crystal structure (colors 1 and 2) on them.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace d43 {

enum Coord : int { X1 = 0, X2 = 1, X3 = 2, XB3 = 3, XB2 = 4, XB1 = 5 };

struct CrystalElement {
  std::array<long, 6> x{};

  long& operator[](int k) { return x[static_cast<std::size_t>(k)]; }
  long operator[](int k) const { return x[static_cast<std::size_t>(k)]; }
  friend auto operator<=>(const CrystalElement&, const CrystalElement&) = default;

  /// "(x1,x2,x3,x̄3,x̄2,x̄1)".
  std::string str() const;
};

struct CrystalElementHash {
  std::size_t operator()(const CrystalElement& b) const noexcept;
};

/// B_l: nonnegative coordinates with s(b) <= l.
struct Finite {
  long l;
  friend bool operator==(const Finite&, const Finite&) = default;
};
/// B_{>=0}: nonnegative coordinates, no bound on s(b).
struct NonNegativeUnbounded {
  friend bool operator==(const NonNegativeUnbounded&, const NonNegativeUnbounded&) = default;
};
/// B_infinity: arbitrary integer coordinates.
struct FreeIntegral {
  friend bool operator==(const FreeIntegral&, const FreeIntegral&) = default;
};
using LevelCtx = std::variant<Finite, NonNegativeUnbounded, FreeIntegral>;

bool parity_ok(const CrystalElement& b);
/// s(b) = x1 + x2 + (x3 + x̄3)/2 + x̄2 + x̄1; requires parity.
long s(const CrystalElement& b);
bool is_valid(const CrystalElement& b, const LevelCtx& ctx);
/// Throws std::invalid_argument unless b is valid in ctx.
void require_valid(const CrystalElement& b, const LevelCtx& ctx);

using MaybeElement = std::optional<CrystalElement>;

MaybeElement g2_e(int i, const CrystalElement& b, const LevelCtx& ctx);
MaybeElement g2_f(int i, const CrystalElement& b, const LevelCtx& ctx);
long g2_eps(int i, const CrystalElement& b);
long g2_phi(int i, const CrystalElement& b);

inline MaybeElement e1(const CrystalElement& b, const LevelCtx& ctx) { return g2_e(1, b, ctx); }
inline MaybeElement f1(const CrystalElement& b, const LevelCtx& ctx) { return g2_f(1, b, ctx); }
inline MaybeElement e2(const CrystalElement& b, const LevelCtx& ctx) { return g2_e(2, b, ctx); }
inline MaybeElement f2(const CrystalElement& b, const LevelCtx& ctx) { return g2_f(2, b, ctx); }
inline long eps1(const CrystalElement& b) { return g2_eps(1, b); }
inline long phi1(const CrystalElement& b) { return g2_phi(1, b); }
inline long eps2(const CrystalElement& b) { return g2_eps(2, b); }
inline long phi2(const CrystalElement& b) { return g2_phi(2, b); }

/// All elements of B^{G2}(jΛ1), lexicographic order.
std::vector<CrystalElement> enumerate_g2(long j);

/// One-row tableau over 1 < 2 < 3 < 0 < 3̄ < 2̄ < 1̄ with at most one 0.
struct Tableau {
  // Multiplicities in letter order 1, 2, 3, 0, 3̄, 2̄, 1̄.
  std::array<long, 7> w{};
  friend bool operator==(const Tableau&, const Tableau&) = default;

  long length() const;
  /// Space separated letters. Barred letters use an overbar, or "-1" etc. when ascii.
  std::string render(bool ascii = false) const;
  /// Compact machine label: letters joined without spaces, barred as "1b".
  std::string label() const;
};

Tableau to_tableau(const CrystalElement& b);
CrystalElement from_tableau(const Tableau& t);

}  // namespace d43
