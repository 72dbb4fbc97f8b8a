#pragma once

#include "d43/exactalg/lpoly2.hpp"
#include "d43/exactalg/qrat.hpp"

#include <gmpxx.h>

namespace d43 {

/// Zero/one/zero-test for the exact scalar types used by the matrix code.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<QRat> {
  static QRat zero() { return QRat::zero(); }
  static QRat one() { return QRat::one(); }
  static bool is_zero(const QRat& v) { return v.is_zero(); }
  /// Rough size used to prefer small pivots.
  static long weight(const QRat& v) { return v.num().degree() + v.den().degree(); }
};

template <>
struct ScalarTraits<mpq_class> {
  static mpq_class zero() { return 0; }
  static mpq_class one() { return 1; }
  static bool is_zero(const mpq_class& v) { return sgn(v) == 0; }
  static long weight(const mpq_class& v) {
    return static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2));
  }
};

template <>
struct ScalarTraits<LPoly2> {
  static LPoly2 zero() { return {}; }
  static LPoly2 one() { return LPoly2(1); }
  static bool is_zero(const LPoly2& v) { return v.is_zero(); }
  static long weight(const LPoly2& v) { return static_cast<long>(v.size()); }
};

}  // namespace d43
