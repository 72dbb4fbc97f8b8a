#pragma once

// Exact rational functions in q over the integers.
//
// Canonical form: numerator and denominator are coprime in Z[q] (which
// includes integer content) and the denominator has a positive leading
// coefficient. Structural equality is therefore mathematical equality.

#include "d43/exactalg/zpoly.hpp"

#include <string>

namespace d43 {

class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT: integers embed as constants
  explicit QRat(ZPoly num) : num_(std::move(num)), den_(1) {}
  QRat(ZPoly num, ZPoly den);
  explicit QRat(const mpq_class& c);

  static QRat zero() { return {}; }
  static QRat one() { return QRat(1); }
  /// q^k for any integer k.
  static QRat q_power(long k);

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  QRat operator-() const;
  QRat inverse() const;

  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  QRat pow(long n) const;
  /// Substitute q -> q^-1.
  QRat bar() const;
  /// Substitute q -> q^k for k >= 1.
  QRat dilated(std::size_t k) const;
  /// Evaluate at a rational point; throws std::domain_error on a pole.
  mpq_class eval(const mpq_class& q) const;

  /// "num" or "(num)/(den)" with both parts in descending powers of q.
  std::string str() const;

 private:
  struct Canonical {};
  QRat(ZPoly num, ZPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  ZPoly num_;
  ZPoly den_;
};

/// Quantum integer [m]_i = (q_i^m - q_i^-m)/(q_i - q_i^-1) with q_0=q_1=q, q_2=q^3.
QRat q_int(long m, int node);
/// [n]_i! = [1]_i [2]_i ... [n]_i.
QRat q_factorial(long n, int node);
/// q_i for node i.
QRat q_node(int node);

}  // namespace d43
