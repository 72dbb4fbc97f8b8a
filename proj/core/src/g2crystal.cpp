#include "d43/g2crystal.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace d43 {

namespace {

long pos(long v) { return v > 0 ? v : 0; }

void check_color(int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("G2 color must be 1 or 2");
}

MaybeElement checked(CrystalElement b, const LevelCtx& ctx) {
  if (std::holds_alternative<FreeIntegral>(ctx)) return b;
  for (long v : b.x)
    if (v < 0) return std::nullopt;
  return b;
}

const char* const kLetters[7] = {"1", "2", "3", "0", "3̄", "2̄", "1̄"};
const char* const kAscii[7] = {"1", "2", "3", "0", "-3", "-2", "-1"};
const char* const kLabels[7] = {"1", "2", "3", "0", "3b", "2b", "1b"};

}  // namespace

std::string CrystalElement::str() const {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < 6; ++k) os << (k ? "," : "") << x[k];
  os << ")";
  return os.str();
}

std::size_t CrystalElementHash::operator()(const CrystalElement& b) const noexcept {
  std::size_t h = 0;
  for (long v : b.x) h = h * 1000003u ^ std::hash<long>{}(v);
  return h;
}

bool parity_ok(const CrystalElement& b) { return ((b[X3] - b[XB3]) % 2) == 0; }

long s(const CrystalElement& b) {
  if (!parity_ok(b)) throw std::invalid_argument("s(b): x3 and x̄3 differ in parity");
  return b[X1] + b[X2] + (b[X3] + b[XB3]) / 2 + b[XB2] + b[XB1];
}

bool is_valid(const CrystalElement& b, const LevelCtx& ctx) {
  if (!parity_ok(b)) return false;
  if (std::holds_alternative<FreeIntegral>(ctx)) return true;
  for (long v : b.x)
    if (v < 0) return false;
  if (const auto* f = std::get_if<Finite>(&ctx)) return s(b) <= f->l;
  return true;
}

void require_valid(const CrystalElement& b, const LevelCtx& ctx) {
  if (!is_valid(b, ctx)) throw std::invalid_argument("element " + b.str() + " is not valid in this context");
}

MaybeElement g2_e(int i, const CrystalElement& b, const LevelCtx& ctx) {
  check_color(i);
  CrystalElement r = b;
  if (i == 1) {
    const long a = b[XB2] - b[XB3];
    const long c = b[X2] - b[X3];
    if (a >= pos(c)) {
      ++r[XB2];
      --r[XB1];
    } else if (a < 0 && c <= 0) {
      ++r[X3];
      --r[XB3];
    } else {
      ++r[X1];
      --r[X2];
    }
  } else if (b[XB3] >= b[X3]) {
    r[XB3] += 2;
    --r[XB2];
  } else {
    ++r[X2];
    r[X3] -= 2;
  }
  return checked(r, ctx);
}

MaybeElement g2_f(int i, const CrystalElement& b, const LevelCtx& ctx) {
  check_color(i);
  CrystalElement r = b;
  if (i == 1) {
    const long a = b[XB2] - b[XB3];
    const long c = b[X2] - b[X3];
    if (pos(a) <= c) {
      --r[X1];
      ++r[X2];
    } else if (a <= 0 && c < 0) {
      --r[X3];
      ++r[XB3];
    } else {
      --r[XB2];
      ++r[XB1];
    }
  } else if (b[XB3] <= b[X3]) {
    --r[X2];
    r[X3] += 2;
  } else {
    r[XB3] -= 2;
    ++r[XB2];
  }
  return checked(r, ctx);
}

long g2_eps(int i, const CrystalElement& b) {
  check_color(i);
  if (i == 1) return b[XB1] + pos(b[XB3] - b[XB2] + pos(b[X2] - b[X3]));
  return b[XB2] + pos(b[X3] - b[XB3]) / 2;
}

long g2_phi(int i, const CrystalElement& b) {
  check_color(i);
  if (i == 1) return b[X1] + pos(b[X3] - b[X2] + pos(b[XB2] - b[XB3]));
  return b[X2] + pos(b[XB3] - b[X3]) / 2;
}

std::vector<CrystalElement> enumerate_g2(long j) {
  if (j < 0) throw std::invalid_argument("enumerate_g2: j must be nonnegative");
  std::vector<CrystalElement> out;
  // x3 + x̄3 = 2h, the remaining four coordinates sum to j - h.
  for (long x1 = 0; x1 <= j; ++x1)
    for (long x2 = 0; x1 + x2 <= j; ++x2)
      for (long x3 = 0; x1 + x2 + (x3 + 1) / 2 <= j; ++x3)
        for (long xb3 = x3 % 2; x1 + x2 + (x3 + xb3) / 2 <= j; xb3 += 2) {
          const long rest = j - x1 - x2 - (x3 + xb3) / 2;
          for (long xb2 = 0; xb2 <= rest; ++xb2) out.push_back({{x1, x2, x3, xb3, xb2, rest - xb2}});
        }
  return out;
}

long Tableau::length() const {
  long n = 0;
  for (long v : w) n += v;
  return n;
}

static std::string join_letters(const Tableau& t, const char* const* names, const char* sep) {
  std::string out;
  for (int k = 0; k < 7; ++k)
    for (long c = 0; c < t.w[k]; ++c) {
      if (!out.empty()) out += sep;
      out += names[k];
    }
  return out;
}

std::string Tableau::render(bool ascii) const { return join_letters(*this, ascii ? kAscii : kLetters, " "); }

std::string Tableau::label() const {
  std::string s = join_letters(*this, kLabels, " ");
  return s.empty() ? "phi" : s;
}

Tableau to_tableau(const CrystalElement& b) {
  if (!is_valid(b, NonNegativeUnbounded{})) throw std::invalid_argument("to_tableau: needs nonnegative coordinates with parity");
  Tableau t;
  const long w0 = b[X3] % 2;
  t.w = {b[X1], b[X2], (b[X3] - w0) / 2, w0, (b[XB3] - w0) / 2, b[XB2], b[XB1]};
  return t;
}

CrystalElement from_tableau(const Tableau& t) {
  for (long v : t.w)
    if (v < 0) throw std::invalid_argument("from_tableau: negative multiplicity");
  if (t.w[3] > 1) throw std::invalid_argument("from_tableau: letter 0 occurs more than once");
  return {{t.w[0], t.w[1], 2 * t.w[2] + t.w[3], 2 * t.w[4] + t.w[3], t.w[5], t.w[6]}};
}

}  // namespace d43
