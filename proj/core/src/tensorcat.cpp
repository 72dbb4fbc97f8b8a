#include "d43/tensorcat.hpp"

namespace d43 {

namespace {

const CrystalElement kVacuum{};

/// Apply f1 and f2 until both are absent; returns the number of steps.
std::size_t saturate(const TensorCrystal<AffineCrystal, AffineCrystal>& t, TensorElem& x) {
  std::size_t n = 0;
  for (;;) {
    if (auto y = t.f(1, x)) {
      x = *y;
    } else if (auto z = t.f(2, x)) {
      x = *z;
    } else {
      return n;
    }
    ++n;
  }
}

bool is_bar_one_power(const CrystalElement& b) {
  for (int k = 0; k < 5; ++k)
    if (b[k] != 0) return false;
  return true;
}

}  // namespace

ArrowSet parse_arrows(const std::string& digits) {
  ArrowSet s = 0;
  for (char c : digits) {
    if (c < '0' || c > '2') throw std::invalid_argument("arrow colors must be digits 0, 1, 2");
    s |= 1u << (c - '0');
  }
  if (s == 0) throw std::invalid_argument("no arrow colors selected");
  return s;
}

long gamma_of(const CrystalElement& b, long m, long l) {
  const long d = phi0(b, Finite{l}) - l + m;
  return m + (d > 0 ? d : 0);
}

CrystalElement bar_one_power(long m) { return {{0, 0, 0, 0, 0, m}}; }

bool gamma_identity_holds(const CrystalElement& b, long m, long l) {
  const auto t = tensor_square(l);
  const long g = gamma_of(b, m, l);
  std::optional<TensorElem> x = TensorElem{b, bar_one_power(m)};
  for (long k = 0; k < g && x; ++k) x = t.f(0, *x);
  const auto left = f_pow(0, g - m, b, Finite{l});
  return x && left && *x == TensorElem{*left, kVacuum};
}

WalkResult vacuum_walk(const TensorElem& start, long l) {
  const auto t = tensor_square(l);
  WalkResult r;
  TensorElem x = start;
  r.steps += saturate(t, x);
  if (!is_bar_one_power(x.second)) {
    r.failure = "right factor is not a power of 1̄ after saturation";
    r.end = x;
    return r;
  }
  r.m = x.second[XB1];
  r.gamma = gamma_of(x.first, r.m, l);
  for (long k = 0; k < r.gamma; ++k) {
    auto y = t.f(0, x);
    if (!y) {
      r.failure = "f0 absent during the gamma step";
      r.end = x;
      return r;
    }
    x = *y;
    ++r.steps;
  }
  if (x.second != kVacuum) {
    r.failure = "right factor is not φ after the gamma step";
    r.end = x;
    return r;
  }
  r.steps += saturate(t, x);
  if (!is_bar_one_power(x.first) || x.second != kVacuum) {
    r.failure = "second saturation did not reach 1̄^m' ⊗ φ";
    r.end = x;
    return r;
  }
  r.m_prime = x.first[XB1];
  for (long k = 0; k < r.m_prime; ++k) {
    auto y = t.f(0, x);
    if (!y) {
      r.failure = "f0 absent during the final step";
      r.end = x;
      return r;
    }
    x = *y;
    ++r.steps;
  }
  r.end = x;
  r.reached = x.first == kVacuum && x.second == kVacuum;
  if (!r.reached) r.failure = "walk ended away from φ ⊗ φ";
  return r;
}

}  // namespace d43
