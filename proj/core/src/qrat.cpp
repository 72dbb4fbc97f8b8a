#include "d43/exactalg/qrat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace d43 {

namespace {

ZPoly reversed(const ZPoly& p) {
  std::vector<mpz_class> c(p.coeffs().rbegin(), p.coeffs().rend());
  return ZPoly(std::move(c));
}

}  // namespace

QRat::QRat(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
  normalize();
}

QRat::QRat(const mpq_class& c)
    : num_(mpz_class(c.get_num())), den_(mpz_class(c.get_den())) {}

QRat QRat::q_power(long k) {
  if (k >= 0) return QRat(ZPoly::q_power(static_cast<std::size_t>(k)), ZPoly(1), Canonical{});
  return QRat(ZPoly(1), ZPoly::q_power(static_cast<std::size_t>(-k)), Canonical{});
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly(1);
    return;
  }
  if (den_.is_one()) return;
  ZPoly g = ZPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = ZPoly::divide(num_, g);
    den_ = ZPoly::divide(den_, g);
  }
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRat QRat::operator-() const { return QRat(-num_, den_, Canonical{}); }

QRat QRat::inverse() const {
  if (num_.is_zero()) throw std::domain_error("QRat: inverse of zero");
  if (num_.lc() < 0) return QRat(-den_, -num_, Canonical{});
  return QRat(den_, num_, Canonical{});
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
  if (a.den_.is_one()) return QRat(a.num_ * b.den_ + b.num_, b.den_, QRat::Canonical{});
  if (b.den_.is_one()) return QRat(a.num_ + b.num_ * a.den_, a.den_, QRat::Canonical{});
  ZPoly g = ZPoly::gcd(a.den_, b.den_);
  if (g.is_one()) {
    ZPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    return QRat(std::move(num), a.den_ * b.den_, QRat::Canonical{});
  }
  ZPoly ad = ZPoly::divide(a.den_, g);
  ZPoly bd = ZPoly::divide(b.den_, g);
  ZPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return {};
  ZPoly den = ad * b.den_;
  ZPoly t = ZPoly::gcd(num, g);
  if (!t.is_one()) {
    num = ZPoly::divide(num, t);
    den = ZPoly::divide(den, t);
  }
  return QRat(std::move(num), std::move(den), QRat::Canonical{});
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return QRat(a.num_ * b.num_, ZPoly(1), QRat::Canonical{});
  ZPoly g1 = ZPoly::gcd(a.num_, b.den_);
  ZPoly g2 = ZPoly::gcd(b.num_, a.den_);
  ZPoly an = g1.is_one() ? a.num_ : ZPoly::divide(a.num_, g1);
  ZPoly bd = g1.is_one() ? b.den_ : ZPoly::divide(b.den_, g1);
  ZPoly bn = g2.is_one() ? b.num_ : ZPoly::divide(b.num_, g2);
  ZPoly ad = g2.is_one() ? a.den_ : ZPoly::divide(a.den_, g2);
  return QRat(an * bn, ad * bd, QRat::Canonical{});
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

QRat QRat::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  QRat result = one();
  QRat base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

QRat QRat::bar() const {
  if (is_zero()) return {};
  // p(1/q) = rev(p) / q^deg p
  ZPoly n = reversed(num_).shifted(static_cast<std::size_t>(den_.degree()));
  ZPoly d = reversed(den_).shifted(static_cast<std::size_t>(num_.degree()));
  return QRat(std::move(n), std::move(d));
}

QRat QRat::dilated(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("QRat::dilated: k must be positive");
  return QRat(num_.dilated(k), den_.dilated(k));
}

mpq_class QRat::eval(const mpq_class& q) const {
  mpq_class d = den_.eval(q);
  if (d == 0) throw std::domain_error("QRat::eval: pole at " + q.get_str());
  return num_.eval(q) / d;
}

std::string QRat::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QRat q_node(int node) {
  switch (node) {
    case 0:
    case 1:
      return QRat::q_power(1);
    case 2:
      return QRat::q_power(3);
    default:
      throw std::invalid_argument("q_node: node index must be 0, 1 or 2");
  }
}

QRat q_int(long m, int node) {
  if (m < 0) throw std::invalid_argument("q_int: m must be nonnegative");
  if (node < 0 || node > 2) throw std::invalid_argument("q_int: node index must be 0, 1 or 2");
  const std::size_t step = node == 2 ? 3 : 1;
  if (m == 0) return QRat::zero();
  // [m]_i = q_i^(1-m) * (1 + q_i^2 + ... + q_i^(2m-2))
  std::vector<mpz_class> c(static_cast<std::size_t>(2 * (m - 1)) * step + 1, mpz_class(0));
  for (long k = 0; k < m; ++k) c[static_cast<std::size_t>(2 * k) * step] = 1;
  return QRat(ZPoly(std::move(c)), ZPoly::q_power(static_cast<std::size_t>(m - 1) * step));
}

QRat q_factorial(long n, int node) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  if (node < 0 || node > 2) throw std::invalid_argument("q_factorial: node index must be 0, 1 or 2");
  QRat r = QRat::one();
  for (long m = 2; m <= n; ++m) r *= q_int(m, node);
  return r;
}

}  // namespace d43
