#include "d43/exactalg/lpoly2.hpp"

#include <sstream>
#include <stdexcept>

namespace d43 {

namespace {

mpq_class int_pow(const mpq_class& b, int e) {
  mpq_class r = 1;
  mpq_class base = b;
  if (e < 0) {
    if (base == 0) throw std::domain_error("LPoly2::eval: negative power of zero");
    base = 1 / base;
    e = -e;
  }
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

LPoly2::LPoly2(long c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, QRat(c));
}

LPoly2::LPoly2(const QRat& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

LPoly2 LPoly2::monomial(const QRat& c, int x_exp, int y_exp) {
  LPoly2 p;
  if (!c.is_zero()) p.terms_.emplace(Exponent{x_exp, y_exp}, c);
  return p;
}

QRat LPoly2::coeff(int x_exp, int y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? QRat::zero() : it->second;
}

LPoly2 LPoly2::operator-() const {
  LPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LPoly2& LPoly2::operator+=(const LPoly2& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LPoly2& LPoly2::operator-=(const LPoly2& o) { return *this += -o; }

LPoly2& LPoly2::operator*=(const QRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LPoly2 operator*(const LPoly2& a, const LPoly2& b) {
  LPoly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r += LPoly2::monomial(ca * cb, ea.first + eb.first, ea.second + eb.second);
  return r;
}

LPoly2 LPoly2::pow(unsigned n) const {
  LPoly2 r(1);
  for (unsigned k = 0; k < n; ++k) r *= *this;
  return r;
}

LPoly2 LPoly2::shifted(int x_exp, int y_exp) const {
  LPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.first + x_exp, e.second + y_exp}, c);
  return r;
}

LPoly2 LPoly2::swapped() const {
  LPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c);
  return r;
}

LPoly2 LPoly2::x_inverted() const {
  LPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{-e.first, e.second}, c);
  return r;
}

bool LPoly2::is_homogeneous(int d) const {
  for (const auto& [e, c] : terms_)
    if (e.first + e.second != d) return false;
  return true;
}

LPoly2 LPoly2::map_coeffs(const std::function<QRat(const QRat&)>& f) const {
  LPoly2 r;
  for (const auto& [e, c] : terms_) {
    QRat v = f(c);
    if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
  }
  return r;
}

mpq_class LPoly2::eval(const mpq_class& q, const mpq_class& xv, const mpq_class& yv) const {
  mpq_class acc = 0;
  for (const auto& [e, c] : terms_) acc += c.eval(q) * int_pow(xv, e.first) * int_pow(yv, e.second);
  return acc;
}

QRat LPoly2::eval_x(const QRat& xv) const {
  QRat acc;
  for (const auto& [e, c] : terms_) {
    if (e.second != 0) throw std::invalid_argument("LPoly2::eval_x: polynomial depends on y");
    acc += c * xv.pow(e.first);
  }
  return acc;
}

std::string LPoly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]";
    if (e.first != 0) os << "*x^" << e.first;
    if (e.second != 0) os << "*y^" << e.second;
  }
  return os.str();
}

}  // namespace d43
