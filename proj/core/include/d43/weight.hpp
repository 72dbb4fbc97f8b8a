#pragma once

// Classical weights in P_cl, stored on the fundamental weights (Λ0, Λ1, Λ2).

#include <array>
#include <compare>
#include <string>

namespace d43 {

struct ClWeight {
  long m0 = 0;
  long m1 = 0;
  long m2 = 0;

  /// <h_i, λ>, the coefficient on Λ_i.
  long pair(int i) const;
  /// Pairing with c = h0 + 2 h1 + 3 h2.
  long level() const { return m0 + 2 * m1 + 3 * m2; }
  bool dominant() const { return m0 >= 0 && m1 >= 0 && m2 >= 0; }

  ClWeight& operator+=(const ClWeight& o) {
    m0 += o.m0;
    m1 += o.m1;
    m2 += o.m2;
    return *this;
  }
  ClWeight& operator-=(const ClWeight& o) {
    m0 -= o.m0;
    m1 -= o.m1;
    m2 -= o.m2;
    return *this;
  }
  friend ClWeight operator+(ClWeight a, const ClWeight& b) { return a += b; }
  friend ClWeight operator-(ClWeight a, const ClWeight& b) { return a -= b; }
  friend ClWeight operator-(const ClWeight& a) { return {-a.m0, -a.m1, -a.m2}; }
  friend ClWeight operator*(long k, const ClWeight& a) { return {k * a.m0, k * a.m1, k * a.m2}; }
  friend auto operator<=>(const ClWeight&, const ClWeight&) = default;

  std::string str() const;
};

/// Λ_i.
ClWeight fundamental_weight(int i);
/// Image of α_i in P_cl: α0=(2,-1,0), α1=(-1,2,-1), α2=(0,-3,2).
ClWeight simple_root(int i);
/// The Cartan matrix entry <h_i, α_j>.
long cartan(int i, int j);

}  // namespace d43
