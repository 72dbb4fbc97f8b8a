#pragma once

// Sparse Laurent polynomials in two spectral variables x, y with
// coefficients in Q(q). Also used for one-variable Laurent polynomials in
// z = x/y by keeping the y-exponent at zero.

#include "d43/exactalg/qrat.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace d43 {

class LPoly2 {
 public:
  using Exponent = std::pair<int, int>;

  LPoly2() = default;
  LPoly2(long c);            // NOLINT: integers embed as constants
  LPoly2(const QRat& c);     // NOLINT: scalars embed as constants
  static LPoly2 monomial(const QRat& c, int x_exp, int y_exp);
  static LPoly2 x() { return monomial(QRat::one(), 1, 0); }
  static LPoly2 y() { return monomial(QRat::one(), 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Exponent, QRat>& terms() const { return terms_; }
  QRat coeff(int x_exp, int y_exp) const;

  LPoly2 operator-() const;
  LPoly2& operator+=(const LPoly2& o);
  LPoly2& operator-=(const LPoly2& o);
  LPoly2& operator*=(const QRat& s);
  friend LPoly2 operator+(LPoly2 a, const LPoly2& b) { return a += b; }
  friend LPoly2 operator-(LPoly2 a, const LPoly2& b) { return a -= b; }
  friend LPoly2 operator*(const LPoly2& a, const LPoly2& b);
  friend LPoly2 operator*(LPoly2 a, const QRat& s) { return a *= s; }
  friend LPoly2 operator*(const QRat& s, LPoly2 a) { return a *= s; }
  LPoly2& operator*=(const LPoly2& o) { return *this = *this * o; }
  friend bool operator==(const LPoly2& a, const LPoly2& b) { return a.terms_ == b.terms_; }

  LPoly2 pow(unsigned n) const;
  /// Multiply by x^a y^b.
  LPoly2 shifted(int x_exp, int y_exp) const;
  /// Exchange the roles of x and y.
  LPoly2 swapped() const;
  /// Substitute x -> 1/x (used for z -> 1/z on one-variable polynomials).
  LPoly2 x_inverted() const;
  /// True if every term has total degree d.
  bool is_homogeneous(int d) const;
  /// Apply a map to each coefficient, dropping zeros.
  LPoly2 map_coeffs(const std::function<QRat(const QRat&)>& f) const;

  /// Evaluate at x, y (and q) in Q.
  mpq_class eval(const mpq_class& q, const mpq_class& xv, const mpq_class& yv) const;
  /// Evaluate the x-variable at a value in Q(q); requires no y dependence.
  QRat eval_x(const QRat& xv) const;

  std::string str() const;

 private:
  std::map<Exponent, QRat> terms_;
};

}  // namespace d43
