#include "d43/appendix.hpp"

#include "d43/parallel.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace d43 {

namespace {

struct V {
  long l, i, j0, j1, y0, y1, p, q, r;
};

V unpack(const TableParams& t) {
  const auto& c = t.index;
  return {c.l, c.i, c.j0, c.j1, c.y0(), c.y1(), t.p, t.q, t.r};
}

struct Case {
  const char* label;
  bool (*in_range)(const V&);
  CrystalElement (*value)(const V&);
};

CrystalElement el(long a, long b, long c, long d, long e, long f) { return {{a, b, c, d, e, f}}; }

// Table A: f1^q f0^p b̄, j0 <= j1.
CrystalElement a_I_i(const V& v) {
  return el(v.p, v.y1, 3 * v.y0 - 2 * v.y1 + v.i - v.p, v.y0 + v.i - v.p, v.y0 + v.j0 - v.q, v.q);
}
CrystalElement a_I_ii(const V& v) {
  return el(v.p, v.y1, 3 * v.y0 - 2 * v.y1 - v.q + v.j0, v.y0 + 2 * v.i - 2 * v.p + v.q - v.j0, v.y0 + v.i - v.p,
            v.j0 - v.i + v.p);
}
CrystalElement a_I_iii(const V& v) {
  return el(v.p - v.q + v.j1, v.y1 + v.q - v.j1, v.y1, v.y0 + 2 * v.i - 2 * v.p + v.j1 - v.j0, v.y0 + v.i - v.p,
            v.j0 - v.i + v.p);
}
CrystalElement a_II_i(const V& v) {
  return el(v.i, v.y1, 2 * v.p - 2 * v.i + 3 * v.y0 - 2 * v.y1, v.y0, v.y0 + v.j0 - v.p + v.i - v.q, v.q);
}
CrystalElement a_II_ii(const V& v) {
  return el(v.i, v.y1, 3 * v.y0 - 2 * v.y1 - v.i + v.j0 + v.p - v.q, v.y0 + v.q - v.j0 + v.p - v.i, v.y0,
            v.j0 - v.p + v.i);
}
CrystalElement a_II_iii(const V& v) {
  return el(v.p + v.j1 - v.q, v.y1 + v.q - v.p + v.i - v.j1, v.y1, 2 * v.p - 2 * v.i + v.j1 - v.j0 + v.y0, v.y0,
            v.j0 - v.p + v.i);
}

const Case kTableA[] = {
    {"I(i)", [](const V& v) { return v.p <= v.i && 0 <= v.q && v.q <= v.j0 - v.i + v.p; }, a_I_i},
    {"I(ii)", [](const V& v) { return v.p <= v.i && v.j0 - v.i + v.p <= v.q && v.q <= v.j1; }, a_I_ii},
    {"I(iii)", [](const V& v) { return v.p <= v.i && v.j1 <= v.q && v.q <= v.j1 + v.p; }, a_I_iii},
    {"II(i)", [](const V& v) { return v.i <= v.p && 0 <= v.q && v.q <= v.j0 - v.p + v.i; }, a_II_i},
    {"II(ii)", [](const V& v) { return v.i <= v.p && v.j0 - v.p + v.i <= v.q && v.q <= v.p - v.i + v.j1; }, a_II_ii},
    {"II(iii)", [](const V& v) { return v.i <= v.p && v.p - v.i + v.j1 <= v.q && v.q <= v.j1 + v.p; }, a_II_iii},
};

// Table B: f0^r f1^q f0^p b̄ with j0 = i. Fractional bounds are cleared:
// q <= p + (j1-i)/2 is 2(q-p) <= j1-i, and so on.
bool b_half_le(const V& v) { return 2 * (v.q - v.p) <= v.j1 - v.i; }
bool b_half_ge(const V& v) { return 2 * (v.q - v.p) >= v.j1 - v.i; }
bool b_two3_le(const V& v) { return 3 * (v.q - v.p) <= 2 * (v.j1 - v.i); }
bool b_two3_ge(const V& v) { return 3 * (v.q - v.p) >= 2 * (v.j1 - v.i); }
// r <= i - p + 2(j1-i)/3 and its reverse.
bool b_r_two3_le(const V& v) { return 3 * (v.r - v.i + v.p) <= 2 * (v.j1 - v.i); }
bool b_r_two3_ge(const V& v) { return 3 * (v.r - v.i + v.p) >= 2 * (v.j1 - v.i); }
bool b_I(const V& v) { return v.p <= v.i && v.p <= v.q && v.r <= v.i + v.q - 2 * v.p; }
bool b_II(const V& v) { return v.p <= v.i && v.p <= v.q && v.r >= v.i + v.q - 2 * v.p; }

CrystalElement b_I_i(const V& v) {
  return el(v.p + v.r, v.y1, v.j1 + v.y1 - v.q - v.r, v.y0 + v.i - 2 * v.p + v.q - v.r, v.y0 + v.i - v.p, v.p);
}
CrystalElement b_I_iii(const V& v) {
  return el(v.j1 + v.p - v.q, v.y1 - v.j1 + v.q + v.r, v.y1, v.y0 + v.j1 + v.i - 2 * v.p - 2 * v.r,
            v.y0 + v.i - v.p, v.p);
}
CrystalElement b_I_v(const V& v) {
  return el(v.j1 + v.p - v.q, 2 * v.y1 - v.y0 - v.p + v.q, 2 * v.y0 - v.y1 - 2 * v.j1 + 2 * v.p + 2 * v.r, v.y1,
            v.y1 + v.j1 + v.i - 2 * v.p - v.r, v.p);
}
CrystalElement b_I_vii(const V& v) {
  return el(v.j1 + v.p - v.q, 2 * v.y1 - v.y0 - v.p + v.q, 2 * v.y1 - v.y0 - v.j1 - v.i + 2 * v.p + 2 * v.r, v.y1,
            v.y1 + v.j1 + v.i - 2 * v.p - v.r, v.p);
}
CrystalElement b_I_viii(const V& v) {
  return el(v.j1 + v.p - v.q, 2 * v.y1 - v.y0 - v.p + v.q, 2 * v.y1 - v.y0 + v.r,
            v.y1 - v.j1 - v.i + 2 * v.p + v.r, v.y1, v.j1 + v.i - v.p - v.r);
}
CrystalElement b_II_i(const V& v) {
  return el(v.p + v.r, v.y1, v.y1 + v.j1 - v.i + 2 * v.p - 2 * v.q, v.y0, v.y0 + v.i - v.p, v.p);
}
CrystalElement b_II_ii(const V& v) {
  return el(v.j1 - v.i + 3 * v.p - 2 * v.q + v.r, v.y1 - v.j1 + v.i - 2 * v.p + 2 * v.q, v.y1,
            v.y0 + v.j1 - v.i + 2 * v.p - 2 * v.q, v.y0 + v.i - v.p, v.p);
}
CrystalElement b_II_iii(const V& v) {
  return el(v.j1 - v.i + 3 * v.p - 2 * v.q + v.r, 2 * v.y1 - v.y0 - v.p + v.q,
            2 * v.y0 - v.y1 - 2 * v.j1 + 2 * v.i - 2 * v.p + 2 * v.q, v.y1, v.y1 + v.j1 - v.q, v.p);
}
CrystalElement b_II_iv(const V& v) {
  return el(v.j1 - v.i + 3 * v.p - 2 * v.q + v.r, 2 * v.y1 - v.y0 - v.p + v.q, 2 * v.y1 - v.y0 + v.i + v.q - 2 * v.p,
            v.y1 - v.j1 + v.q, v.y1, v.j1 + v.p - v.q);
}

const Case kTableB[] = {
    {"I(i)", [](const V& v) { return b_I(v) && b_half_le(v) && 0 <= v.r && v.r <= v.i + v.q - 2 * v.p; }, b_I_i},
    {"I(ii)", [](const V& v) { return b_I(v) && b_half_ge(v) && v.q <= v.j1 && 0 <= v.r && v.r <= v.j1 - v.q; },
     b_I_i},
    {"I(iii)",
     [](const V& v) {
       return b_I(v) && b_half_ge(v) && b_two3_le(v) && v.j1 - v.q <= v.r && v.r <= v.i + v.q - 2 * v.p;
     },
     b_I_iii},
    {"I(iv)",
     [](const V& v) { return b_I(v) && b_two3_ge(v) && v.q <= v.j1 && v.j1 - v.q <= v.r && b_r_two3_le(v); },
     b_I_iii},
    {"I(v)",
     [](const V& v) {
       return b_I(v) && b_two3_ge(v) && v.q <= v.j1 && b_r_two3_ge(v) && v.r <= v.i + v.q - 2 * v.p;
     },
     b_I_v},
    {"I(vi)",
     [](const V& v) { return b_I(v) && v.j1 <= v.q && v.q <= v.j1 + v.p && 0 <= v.r && b_r_two3_le(v); }, b_I_iii},
    {"I(vii)",
     [](const V& v) {
       return b_I(v) && v.j1 <= v.q && v.q <= v.j1 + v.p && b_r_two3_ge(v) && v.r <= v.j1 + v.i - 2 * v.p;
     },
     b_I_vii},
    {"I(viii)",
     [](const V& v) {
       return b_I(v) && v.j1 <= v.q && v.q <= v.j1 + v.p && v.j1 + v.i - 2 * v.p <= v.r &&
              v.r <= v.i + v.q - 2 * v.p;
     },
     b_I_viii},
    {"II(i)", [](const V& v) { return b_II(v) && v.p <= v.q && b_half_le(v); }, b_II_i},
    {"II(ii)", [](const V& v) { return b_II(v) && b_half_ge(v) && b_two3_le(v); }, b_II_ii},
    {"II(iii)", [](const V& v) { return b_II(v) && b_two3_ge(v) && v.q <= v.j1; }, b_II_iii},
    {"II(iv)", [](const V& v) { return b_II(v) && v.j1 <= v.q && v.q <= v.j1 + v.p; }, b_II_iv},
};

// Table C: f0^r f1^q f0^{j0} b̄, j0 <= j1.
// q <= j0 + (j1-i)/2 is 2(q-j0) <= j1-i; q <= (4j0+2j1)/3 - i is 3(q+i) <= 4j0+2j1;
// r <= (j0+2j1)/3 - i is 3(r+i) <= j0+2j1.
bool c_half_le(const V& v) { return 2 * (v.q - v.j0) <= v.j1 - v.i; }
bool c_half_ge(const V& v) { return 2 * (v.q - v.j0) >= v.j1 - v.i; }
bool c_q43_le(const V& v) { return 3 * (v.q + v.i) <= 4 * v.j0 + 2 * v.j1; }
bool c_q43_ge(const V& v) { return 3 * (v.q + v.i) >= 4 * v.j0 + 2 * v.j1; }
bool c_r13_le(const V& v) { return 3 * (v.r + v.i) <= v.j0 + 2 * v.j1; }
bool c_r13_ge(const V& v) { return 3 * (v.r + v.i) >= v.j0 + 2 * v.j1; }
bool c_III(const V& v) { return v.j0 <= v.q && v.q <= v.j0 + v.j1 - v.i; }
bool c_IV(const V& v) { return v.j0 + v.j1 - v.i <= v.q && v.q <= v.j0 + v.j1; }

CrystalElement c_I(const V& v) {
  return el(v.i + v.r, v.y1, v.y1 + v.j0 + v.j1 - 2 * v.i, v.y0, v.y0 + v.i - v.q, v.q);
}
CrystalElement c_II(const V& v) {
  return el(v.i + v.r, v.y1, v.y1 + v.j0 + v.j1 - v.i - v.q, v.y0 - v.i + v.q, v.y0, v.i);
}
CrystalElement c_III_i(const V& v) {
  return el(v.i + v.r, v.y1, v.y1 + v.j0 + v.j1 - v.i - v.q - v.r, v.y0 - v.i + v.q - v.r, v.y0, v.i);
}
CrystalElement c_III_ii(const V& v) {
  return el(v.i + v.r, v.y1, v.y1 + 2 * v.j0 + v.j1 - v.i - 2 * v.q, v.y0 + v.j0 - v.i, v.y0, v.i);
}
CrystalElement c_III_iii(const V& v) {
  return el(v.j0 + v.j1 - v.q, v.y1 - v.j0 - v.j1 + v.i + v.q + v.r, v.y1, v.y0 + v.j0 + v.j1 - 2 * v.i - 2 * v.r,
            v.y0, v.i);
}
CrystalElement c_III_iv(const V& v) {
  return el(2 * v.j0 + v.j1 - 2 * v.q + v.r, v.y1 - 2 * v.j0 - v.j1 + v.i + 2 * v.q, v.y1,
            v.y0 + 3 * v.j0 + v.j1 - 2 * v.i - 2 * v.q, v.y0, v.i);
}
CrystalElement c_III_v(const V& v) {
  return el(v.j0 + v.j1 - v.q, 2 * v.y1 - v.y0 - v.j0 + v.q, 2 * v.y0 - v.y1 - 2 * v.j1 + 2 * v.i + 2 * v.r, v.y1,
            v.y1 + v.j1 - v.i - v.r, v.i);
}
CrystalElement c_III_vi(const V& v) {
  return el(2 * v.j0 + v.j1 - 2 * v.q + v.r, 2 * v.y1 - v.y0 - v.j0 + v.q,
            2 * v.y0 - v.y1 - 2 * v.j0 - 2 * v.j1 + 2 * v.i + 2 * v.q, v.y1, v.y1 + v.j0 + v.j1 - v.i - v.q, v.i);
}
CrystalElement c_IV_iii(const V& v) {
  return el(v.j0 + v.j1 - v.q, 2 * v.y1 - v.y0 - v.j0 + v.q, 2 * v.y0 - v.y1 - v.j1 + v.i + v.r,
            v.y1 - v.j1 + v.i + v.r, v.y1, v.j1 - v.r);
}
CrystalElement c_IV_iv(const V& v) {
  return el(2 * v.j0 + v.j1 - 2 * v.q + v.r, 2 * v.y1 - v.y0 - v.j0 + v.q,
            2 * v.y0 - v.y1 - v.j0 - v.j1 + v.i + v.q, v.y1 - v.j0 - v.j1 + v.i + v.q, v.y1, v.j0 + v.j1 - v.q);
}

const Case kTableC[] = {
    {"I", [](const V& v) { return 0 <= v.q && v.q <= v.i; }, c_I},
    {"II", [](const V& v) { return v.i <= v.q && v.q <= v.j0; }, c_II},
    {"III(i)",
     [](const V& v) {
       return c_III(v) && ((c_half_le(v) && 0 <= v.r && v.r <= v.q - v.j0) ||
                           (c_half_ge(v) && 0 <= v.r && v.r <= v.j0 + v.j1 - v.i - v.q));
     },
     c_III_i},
    {"III(ii)", [](const V& v) { return c_III(v) && c_half_le(v) && v.r >= v.q - v.j0; }, c_III_ii},
    {"III(iii)",
     [](const V& v) {
       const bool lower = v.j0 + v.j1 - v.i - v.q <= v.r;
       return c_III(v) && ((c_half_ge(v) && c_q43_le(v) && lower && v.r <= v.q - v.j0) ||
                           (c_q43_ge(v) && lower && c_r13_le(v)));
     },
     c_III_iii},
    {"III(iv)", [](const V& v) { return c_III(v) && c_half_ge(v) && c_q43_le(v) && v.r >= v.q - v.j0; }, c_III_iv},
    {"III(v)", [](const V& v) { return c_III(v) && c_q43_ge(v) && c_r13_ge(v) && v.r <= v.q - v.j0; }, c_III_v},
    {"III(vi)", [](const V& v) { return c_III(v) && c_q43_ge(v) && v.r >= v.q - v.j0; }, c_III_vi},
    {"IV(i)", [](const V& v) { return c_IV(v) && 0 <= v.r && c_r13_le(v); }, c_III_iii},
    {"IV(ii)", [](const V& v) { return c_IV(v) && c_r13_ge(v) && v.r <= v.j1 - v.i; }, c_III_v},
    {"IV(iii)", [](const V& v) { return c_IV(v) && v.j1 - v.i <= v.r && v.r <= v.q - v.j0; }, c_IV_iii},
    {"IV(iv)", [](const V& v) { return c_IV(v) && v.r >= v.q - v.j0; }, c_IV_iv},
};

// Table D: f0^{j0+q-2p} f1^q f0^p b̄, j0 <= j1. Here k = q - p + i.
long d_k(const V& v) { return v.q - v.p + v.i; }

CrystalElement d_I_i(const V& v) {
  return el(v.i - v.p + v.q, v.y1, v.y1 + v.j0 + v.j1 - 2 * v.i + 2 * v.p - 2 * v.q, v.y0, v.y0 + v.i - v.p, v.p);
}
CrystalElement d_I_ii(const V& v) {
  return el(v.j0 + v.j1 - v.i + v.p - v.q, v.y1 - v.j0 - v.j1 + 2 * v.i - 2 * v.p + 2 * v.q, v.y1,
            v.y0 + v.j0 + v.j1 - 2 * v.i + 2 * v.p - 2 * v.q, v.y0 + v.i - v.p, v.p);
}
CrystalElement d_I_iii(const V& v) {
  return el(v.j0 + v.j1 - v.i + v.p - v.q, 2 * v.y1 - v.y0 - v.j0 + v.i - v.p + v.q,
            2 * v.y0 - v.y1 - 2 * v.j1 + 2 * v.i - 2 * v.p + 2 * v.q, v.y1, v.y1 + v.j1 - v.q, v.p);
}
CrystalElement d_I_iv(const V& v) {
  return el(v.j0 + v.j1 - v.i + v.p - v.q, 2 * v.y1 - v.y0 - v.j0 + v.i - v.p + v.q,
            2 * v.y1 - v.y0 - v.j0 + 2 * v.i - 2 * v.p + v.q, v.y1 - v.j1 + v.q, v.y1, v.j1 + v.p - v.q);
}
CrystalElement d_II_i(const V& v) {
  return el(v.i - v.p + v.q, v.y1, v.y1 + v.j0 + v.j1 - v.i + v.p - 2 * v.q, v.y0 - v.i + v.p, v.y0, v.i);
}
CrystalElement d_II_ii(const V& v) {
  return el(v.j0 + v.j1 - v.q, v.y1 - v.j0 - v.j1 + v.i - v.p + 2 * v.q, v.y1,
            v.y0 + v.j0 + v.j1 - 2 * v.i + 2 * v.p - 2 * v.q, v.y0, v.i);
}
CrystalElement d_II_iii(const V& v) {
  return el(v.j0 + v.j1 - v.q, 2 * v.y1 - v.y0 - v.j0 + v.q, 2 * v.y0 - v.y1 - 2 * v.j1 + 2 * v.i - 2 * v.p + 2 * v.q,
            v.y1, v.y1 + v.j1 - v.i + v.p - v.q, v.i);
}
CrystalElement d_II_iv(const V& v) {
  return el(v.j0 + v.j1 - v.q, 2 * v.y1 - v.y0 - v.j0 + v.q, 2 * v.y0 - v.y1 - v.j1 + v.i - v.p + v.q,
            v.y1 - v.j1 + v.i - v.p + v.q, v.y1, v.j1 + v.p - v.q);
}

const Case kTableD[] = {
    {"I(i)", [](const V& v) { return v.p <= v.i && v.i <= d_k(v) && 2 * d_k(v) <= v.j0 + v.j1; }, d_I_i},
    {"I(ii)",
     [](const V& v) { return v.p <= v.i && 2 * d_k(v) >= v.j0 + v.j1 && 3 * d_k(v) <= v.j0 + 2 * v.j1; }, d_I_ii},
    {"I(iii)", [](const V& v) { return v.p <= v.i && 3 * d_k(v) >= v.j0 + 2 * v.j1 && v.q <= v.j1; }, d_I_iii},
    {"I(iv)", [](const V& v) { return v.p <= v.i && v.j1 <= v.q && v.q <= v.j1 + v.p; }, d_I_iv},
    {"II(i)", [](const V& v) { return v.i <= v.p && v.p <= v.q && 2 * v.q <= v.j0 + v.j1 + v.p - v.i; }, d_II_i},
    {"II(ii)",
     [](const V& v) { return v.i <= v.p && 2 * v.q >= v.j0 + v.j1 + v.p - v.i && 3 * d_k(v) <= v.j0 + 2 * v.j1; },
     d_II_ii},
    {"II(iii)", [](const V& v) { return v.i <= v.p && 3 * d_k(v) >= v.j0 + 2 * v.j1 && d_k(v) <= v.j1; }, d_II_iii},
    {"II(iv)", [](const V& v) { return v.i <= v.p && v.j1 <= d_k(v) && d_k(v) <= v.j1 + v.i; }, d_II_iv},
};

template <std::size_t N>
std::vector<CaseValue> collect(const Case (&cases)[N], Table t, const TableParams& prm, const FormulaMutator& mutate) {
  const V v = unpack(prm);
  std::vector<CaseValue> out;
  for (const auto& c : cases) {
    if (!c.in_range(v)) continue;
    CaseValue cv{c.label, c.value(v)};
    if (mutate) mutate(t, cv.label, cv.x);
    out.push_back(std::move(cv));
  }
  return out;
}

bool table_applies(Table t, const ComponentIndex& c) {
  if (c.j0 > c.j1) return false;
  return t != Table::B || c.j0 == c.i;
}

}  // namespace

const char* table_name(Table t) {
  switch (t) {
    case Table::A: return "A";
    case Table::B: return "B";
    case Table::C: return "C";
    case Table::D: return "D";
  }
  return "?";
}

std::string TableParams::str() const {
  std::ostringstream os;
  os << index.str() << " p=" << p << " q=" << q << " r=" << r;
  return os.str();
}

namespace {

bool in_range(Table t, const TableParams& prm) {
  const auto& c = prm.index;
  const long p = prm.p, q = prm.q, r = prm.r;
  switch (t) {
    case Table::A: return 0 <= p && p <= c.j0 && 0 <= q && q <= c.j1 + p && r == 0;
    case Table::B: return 0 <= p && p <= c.i && p <= q && q <= c.j1 + p && r >= 0;
    case Table::C: return p == c.j0 && 0 <= q && q <= c.j0 + c.j1 && r >= 0;
    case Table::D: return 0 <= p && p <= c.j0 && p <= q && q <= c.j1 + p && r == c.j0 + q - 2 * p;
  }
  return false;
}

}  // namespace

std::vector<CaseValue> table_cases(Table t, const TableParams& prm, const FormulaMutator& mutate) {
  if (!index_valid(prm.index)) throw std::invalid_argument("table_cases: invalid index " + prm.index.str());
  if (!table_applies(t, prm.index))
    throw std::invalid_argument(std::string("table ") + table_name(t) + " does not cover index " + prm.index.str());
  if (!in_range(t, prm))
    throw std::invalid_argument(std::string("table ") + table_name(t) + ": parameters out of range " + prm.str());
  switch (t) {
    case Table::A: return collect(kTableA, t, prm, mutate);
    case Table::B: return collect(kTableB, t, prm, mutate);
    case Table::C: return collect(kTableC, t, prm, mutate);
    case Table::D: return collect(kTableD, t, prm, mutate);
  }
  return {};
}

CrystalElement appendix_formula(Table t, const TableParams& prm) {
  const auto cases = table_cases(t, prm);
  if (cases.empty()) throw std::invalid_argument(std::string("table ") + table_name(t) + ": no case for " + prm.str());
  for (const auto& c : cases)
    if (c.x != cases.front().x)
      throw std::logic_error(std::string("table ") + table_name(t) + ": cases " + cases.front().label + " and " +
                             c.label + " disagree at " + prm.str());
  return cases.front().x;
}

MaybeElement table_oracle(Table t, const TableParams& prm) {
  const LevelCtx ctx = NonNegativeUnbounded{};
  const auto& c = prm.index;
  MaybeElement x = bbar(c);
  switch (t) {
    case Table::A: return f_pow(1, prm.q, f_pow(0, prm.p, x, ctx), ctx);
    case Table::B: return f_pow(0, prm.r, f_pow(1, prm.q, f_pow(0, prm.p, x, ctx), ctx), ctx);
    case Table::C: return f_pow(0, prm.r, f_pow(1, prm.q, f_pow(0, c.j0, x, ctx), ctx), ctx);
    case Table::D:
      return f_pow(0, c.j0 + prm.q - 2 * prm.p, f_pow(1, prm.q, f_pow(0, prm.p, x, ctx), ctx), ctx);
  }
  return std::nullopt;
}

long table_r_cap(const ComponentIndex& c) { return c.j0 + c.j1 + c.l; }

std::vector<TableParams> table_domain(Table t, const ComponentIndex& c) {
  std::vector<TableParams> out;
  if (!table_applies(t, c)) return out;
  const long cap = table_r_cap(c);
  switch (t) {
    case Table::A:
      for (long p = 0; p <= c.j0; ++p)
        for (long q = 0; q <= c.j1 + p; ++q) out.push_back({c, p, q, 0});
      break;
    case Table::B:
      for (long p = 0; p <= c.i; ++p)
        for (long q = p; q <= c.j1 + p; ++q)
          for (long r = 0; r <= cap; ++r) out.push_back({c, p, q, r});
      break;
    case Table::C:
      for (long q = 0; q <= c.j0 + c.j1; ++q)
        for (long r = 0; r <= cap; ++r) out.push_back({c, c.j0, q, r});
      break;
    case Table::D:
      for (long p = 0; p <= c.j0; ++p)
        for (long q = p; q <= c.j1 + p; ++q) out.push_back({c, p, q, c.j0 + q - 2 * p});
      break;
  }
  return out;
}

namespace {

struct Tally {
  std::mutex m;
  IdentityReport rep;
  void add(std::size_t checked, std::size_t failures, const std::string& first) {
    std::lock_guard<std::mutex> lock(m);
    rep.checked += checked;
    rep.failures += failures;
    if (rep.first_failure.empty() && !first.empty()) rep.first_failure = first;
  }
};

}  // namespace

std::vector<IdentityReport> verify_appendix(long l_max, const FormulaMutator& mutate, unsigned jobs) {
  if (l_max < 1) throw std::invalid_argument("verify_appendix: l_max must be positive");
  std::vector<ComponentIndex> indices;
  for (long l = 1; l <= l_max; ++l)
    for (const auto& c : index_set(l)) indices.push_back(c);

  std::vector<IdentityReport> out;
  for (Table t : {Table::A, Table::B, Table::C, Table::D}) {
    Tally tally;
    tally.rep.name = std::string("table ") + table_name(t);
    parallel_for(indices.size(), jobs, [&](std::size_t k) {
      std::size_t checked = 0, failures = 0;
      std::string first;
      for (const auto& prm : table_domain(t, indices[k])) {
        ++checked;
        const auto oracle = table_oracle(t, prm);
        const auto cases = table_cases(t, prm, mutate);
        std::string why;
        if (!oracle) {
          why = "operator application is absent";
        } else if (cases.empty()) {
          why = "no case applies";
        } else {
          for (const auto& c : cases)
            if (c.x != *oracle) {
              why = "case " + c.label + " gives " + c.x.str() + ", operators give " + oracle->str();
              break;
            }
        }
        if (!why.empty()) {
          ++failures;
          if (first.empty()) first = prm.str() + ": " + why;
        }
      }
      tally.add(checked, failures, first);
    });
    out.push_back(tally.rep);
  }
  return out;
}

namespace {

void record(IdentityReport& rep, bool ok, const std::string& what) {
  ++rep.checked;
  if (ok) return;
  ++rep.failures;
  if (rep.first_failure.empty()) rep.first_failure = what;
}

std::string at(const ComponentIndex& c, long p, long q, long r) {
  return TableParams{c, p, q, r}.str();
}

}  // namespace

std::vector<IdentityReport> verify_lemmas(long l_max) {
  if (l_max < 2) throw std::invalid_argument("verify_lemmas: l_max must be at least 2");
  const LevelCtx inf = NonNegativeUnbounded{};
  IdentityReport onion{"onion"}, comm{"comm"}, invol2{"invol2"};
  IdentityReport s1[5] = {{"step1 (i)"}, {"step1 (ii)"}, {"step1 (iii)"}, {"step1 (iv)"}, {"step1 (v)"}};
  IdentityReport s2[5] = {{"step2 (i')"}, {"step2 (ii')"}, {"step2 (iii')"}, {"step2 (iv')"}, {"step2 (v')"}};

  for (long l = 1; l <= l_max; ++l) {
    const LevelCtx fin = Finite{l};
    for (const auto& c : index_set(l)) {
      const long j0 = c.j0, j1 = c.j1;
      auto img = [&](long p, long q, long r, const LevelCtx& ctx) { return component_image(c, p, q, r, ctx); };

      if (j0 <= j1) {
        // f0 f1^q f0^p b̄^{l,i}_{j0,j1} = f1^{q-1} f0^p b̄^{l-1,i}_{j0-1,j1-1} on B_{>=0}.
        if (c.i < j0)
          for (long p = 0; p < j0; ++p)
            for (long q = p + 1; q <= j1 + p; ++q) {
              const auto lhs = f_pow(0, 1, img(p, q, 0, inf), inf);
              const ComponentIndex d{l - 1, c.i, j0 - 1, j1 - 1};
              const auto rhs = f_pow(1, q - 1, f_pow(0, p, bbar(d), inf), inf);
              record(onion, lhs && lhs == rhs, at(c, p, q, 0));
            }
        // f0 f1^q f0^p b̄ = f1^q f0^{p+1} b̄ for q <= p < j0, on B_{>=0}.
        for (long p = 0; p < j0; ++p)
          for (long q = 0; q <= p; ++q) {
            const auto lhs = f_pow(0, 1, img(p, q, 0, inf), inf);
            const auto rhs = f_pow(1, q, f_pow(0, p + 1, bbar(c), inf), inf);
            record(comm, lhs && lhs == rhs, at(c, p, q, 0));
          }
        // (f0^r f1^q f0^p b̄_{j0,j1})^∨ = f0^{r'} f1^{q'} f0^{p'} b̄_{j1,j0} in B_l.
        const ComponentIndex swapped{l, c.i, j1, j0};
        for (const auto& t : enumerate_a2(j0, j1)) {
          const auto lhs = img(t.p, t.q, t.r, fin);
          const Raise pr = a2_raise(t);
          const auto rhs = component_image(swapped, pr.p, pr.q, pr.r, fin);
          record(invol2, lhs && rhs && involution(*lhs) == *rhs, at(c, t.p, t.q, t.r));
        }
      }

      // The A2 relations of the two proof steps, read as statements about
      // x(p,q,r) = f0^r f1^q f0^p b̄ in B_l. Step 1 is stated for j0 <= j1,
      // step 2 for the swapped indices, whose first weight is the larger.
      auto same = [](const MaybeElement& a, const MaybeElement& b) { return a == b; };
      for (const auto& t : enumerate_a2(j0, j1)) {
        const long p = t.p, q = t.q, r = t.r;
        const auto x = img(p, q, r, fin);
        const std::string where = at(c, p, q, r);
        if (j0 <= j1) {
          record(s1[0], x.has_value(), where);
          if (r == 0) {
            const auto top = img(p, q, j0 + q - 2 * p, fin);
            record(s1[1], top && f_case(*top) == 1 && s(*top) == l, where);
            record(s1[3], x && !e(0, *x, fin), where);
          }
          MaybeElement want;
          if (p <= q && q < p + r)
            want = img(p + 1, q + 1, r - 1, fin);
          else if (q < j1 + p)
            want = img(p, q + 1, r, fin);
          record(s1[2], x && same(f(1, *x, fin), want), where);
          if (p == 0 && r >= q) record(s1[4], x && !e(1, *x, fin), where);
        }
        if (j0 >= j1) {
          record(s2[0], x.has_value(), where);
          const MaybeElement down = r > 0 ? img(p, q, r - 1, fin) : MaybeElement{};
          record(s2[1], x && same(e(0, *x, fin), down), where);
          MaybeElement want;
          if (p - q + r < 0)
            want = img(p, q - 1, r, fin);
          else if (p > 0)
            want = img(p - 1, q - 1, r + 1, fin);
          record(s2[2], x && same(e(1, *x, fin), want), where);
          if (r == j0 + q - 2 * p) record(s2[3], x && !f(0, *x, fin), where);
          if (p + r <= q && q == j1 + p) record(s2[4], x && !f(1, *x, fin), where);
        }
      }
    }
  }

  std::vector<IdentityReport> out{onion, comm, invol2};
  for (auto& r : s1) out.push_back(r);
  for (auto& r : s2) out.push_back(r);
  return out;
}

}  // namespace d43
