#include "d43/exactalg/zpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace d43 {

namespace {

const mpz_class& zero_coeff() {
  static const mpz_class z = 0;
  return z;
}

// Remainder of a modulo b in the symmetric range (-b/2, b/2].
mpz_class symmetric_mod(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_class twice = 2 * r;
  if (twice > b) r -= b;
  return r;
}

}  // namespace

ZPoly::ZPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

ZPoly::ZPoly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

ZPoly ZPoly::monomial(const mpz_class& c, std::size_t degree) {
  ZPoly p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, mpz_class(0));
  p.c_[degree] = c;
  return p;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool ZPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t k = 0; k + 1 < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

std::size_t ZPoly::valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return c_.empty() ? 0 : k;
}

const mpz_class& ZPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : zero_coeff();
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (c_.empty()) return {};
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  return divexact(g);
}

mpz_class ZPoly::max_norm() const {
  mpz_class m = 0;
  for (const auto& c : c_) {
    mpz_class a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

ZPoly& ZPoly::operator*=(const ZPoly& o) { return *this = *this * o; }

ZPoly& ZPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

ZPoly ZPoly::shifted(std::size_t k) const {
  if (c_.empty() || k == 0) return *this;
  ZPoly r;
  r.c_.assign(k, mpz_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

ZPoly ZPoly::unshifted(std::size_t k) const {
  if (k == 0 || c_.empty()) return *this;
  if (k > valuation()) throw std::domain_error("ZPoly::unshifted: q-power does not divide");
  ZPoly r;
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  return r;
}

ZPoly ZPoly::divexact(const mpz_class& s) const {
  ZPoly r = *this;
  if (s == 1) return r;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return r;
}

std::optional<ZPoly> ZPoly::try_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("ZPoly::try_divide: division by zero");
  if (a.is_zero()) return ZPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem = a.c_;
  const std::size_t db = b.c_.size() - 1;
  std::vector<mpz_class> quot(a.c_.size() - db, mpz_class(0));
  const mpz_class& blc = b.c_.back();
  mpz_class t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), blc.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), blc.get_mpz_t());
    quot[k] = t;
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
  }
  for (std::size_t j = 0; j < db; ++j)
    if (rem[j] != 0) return std::nullopt;
  return ZPoly(std::move(quot));
}

ZPoly ZPoly::divide(const ZPoly& a, const ZPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("ZPoly::divide: inexact division");
  return *std::move(q);
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& blc = bc.back();
  while (r.size() >= bc.size()) {
    mpz_class top = r.back();
    const std::size_t shift = r.size() - bc.size();
    for (auto& c : r) c *= blc;
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(r[shift + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return ZPoly(std::move(r));
}

mpz_class gcd_int(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Rebuild a polynomial from its value at xi using balanced base-xi digits.
ZPoly interpolate_balanced(mpz_class value, const mpz_class& xi) {
  std::vector<mpz_class> c;
  while (value != 0) {
    mpz_class d = symmetric_mod(value, xi);
    c.push_back(d);
    value -= d;
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), xi.get_mpz_t());
  }
  return ZPoly(std::move(c));
}

}  // namespace

ZPoly ZPoly::gcd_prs(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  mpz_class g = gcd_int(a.content(), b.content());
  ZPoly u = a.primitive_part();
  ZPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    ZPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part() * g;
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();

  mpz_class g = gcd_int(a.content(), b.content());
  if (a.is_constant() || b.is_constant()) return ZPoly(g);

  // Common power of q first; the remaining cofactors have nonzero constant terms.
  const std::size_t shift = std::min(a.valuation(), b.valuation());
  ZPoly u = a.primitive_part().unshifted(a.valuation());
  ZPoly v = b.primitive_part().unshifted(b.valuation());
  if (u.is_constant() || v.is_constant()) return ZPoly::monomial(g, shift);
  if (u == v) return u.shifted(shift) * g;

  // Heuristic gcd: evaluate at a large integer, take the integer gcd and
  // reconstruct. A primitive candidate dividing both inputs is the gcd once
  // xi exceeds 2*min(|u|,|v|)+2.
  mpz_class xi = 2 * std::min(u.max_norm(), v.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class gu = u.eval(xi);
    mpz_class gv = v.eval(xi);
    mpz_class gamma = gcd_int(gu, gv);
    ZPoly cand = interpolate_balanced(gamma, xi).primitive_part();
    if (!cand.is_zero() && try_divide(u, cand) && try_divide(v, cand))
      return cand.shifted(shift) * g;
    xi = (xi * 73794) / 27011;
  }
  return gcd_prs(u, v).shifted(shift) * g;
}

ZPoly ZPoly::dilated(std::size_t k) const {
  if (k == 1 || c_.size() <= 1) return *this;
  ZPoly r;
  r.c_.assign((c_.size() - 1) * k + 1, mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  return r;
}

mpz_class ZPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= x;
    acc += c_[k];
  }
  return acc;
}

mpq_class ZPoly::eval(const mpq_class& x) const {
  // Homogenized Horner in numerator/denominator to avoid repeated gcds.
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  mpz_class acc = 0;
  mpz_class dpow = 1;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= n;
    acc += c_[k] * dpow;
    dpow *= d;
  }
  // acc = sum c_k n^k d^(deg-k); divide by d^deg.
  mpz_class den = 1;
  for (std::size_t k = 1; k < c_.size(); ++k) den *= d;
  mpq_class r(acc, den);
  r.canonicalize();
  return r;
}

std::string ZPoly::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace d43
