#pragma once

// Dense univariate polynomials over the integers, in the indeterminate q.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace d43 {

class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(long c);  // NOLINT: integers embed as constants
  explicit ZPoly(const mpz_class& c);
  /// Coefficients from the constant term upward.
  explicit ZPoly(std::vector<mpz_class> coeffs);
  ZPoly(std::initializer_list<long> coeffs);

  static ZPoly monomial(const mpz_class& c, std::size_t degree);
  static ZPoly q_power(std::size_t degree) { return monomial(1, degree); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// A single term c*q^k.
  bool is_monomial() const;
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Multiplicity of q as a factor; 0 for the zero polynomial.
  std::size_t valuation() const;
  const mpz_class& lc() const { return c_.back(); }
  const mpz_class& coeff(std::size_t k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  mpz_class content() const;
  ZPoly primitive_part() const;
  /// Infinity norm of the coefficient vector.
  mpz_class max_norm() const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const ZPoly& o);
  ZPoly& operator*=(const mpz_class& s);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  /// Multiply by q^k.
  ZPoly shifted(std::size_t k) const;
  /// Divide by q^k; requires k <= valuation().
  ZPoly unshifted(std::size_t k) const;
  /// Divide every coefficient by an integer that divides them all.
  ZPoly divexact(const mpz_class& s) const;

  /// Exact quotient a/b over Z[q], or nullopt if b does not divide a.
  static std::optional<ZPoly> try_divide(const ZPoly& a, const ZPoly& b);
  /// Exact quotient; throws std::domain_error if b does not divide a.
  static ZPoly divide(const ZPoly& a, const ZPoly& b);

  /// Greatest common divisor in Z[q], normalized to a positive leading coefficient.
  static ZPoly gcd(const ZPoly& a, const ZPoly& b);
  /// Primitive pseudo-remainder sequence gcd; slower reference path.
  static ZPoly gcd_prs(const ZPoly& a, const ZPoly& b);

  /// Substitute q -> q^k.
  ZPoly dilated(std::size_t k) const;
  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;

  /// Descending-power rendering such as "q^3-2*q+1".
  std::string str(const char* var = "q") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace d43
