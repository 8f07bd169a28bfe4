#include <stdexcept>

#include "dioph/case_solvers.hpp"

namespace dioph {

namespace {

const Int* find_binding(const Witness& w, const char* name) {
  auto it = w.find(name);
  return it == w.end() ? nullptr : &it->second;
}

// The case-specific defining equations. Optional structure symbols are
// checked when present; solver-emitted witnesses always carry the full set,
// fallback witnesses only the gcd decomposition.
bool case_equations_hold(const EquationParams& p, const Witness& w, CaseId id,
                         const Int& d, const Int& x1, const Int& y1) {
  const Int sum = p.k + p.l;
  auto get = [&](const char* name) { return find_binding(w, name); };

  switch (id) {
    case CaseId::Case1:
      return x1 == 1 && y1 == 1;

    case CaseId::Case2: {
      if (y1 != 1) return false;
      const Int* t = get("t");
      const Int* L = get("L");
      if (!t && !L) return true;
      if (!t || !L) return false;
      if (*L != lcm(p.n, p.m - p.n)) return false;
      if (x1 != ipow(*t, *L / p.n)) return false;
      return d == ipow(*t, *L / (p.m - p.n));
    }

    case CaseId::Case3: {
      const Int* r = get("r");
      const Int* s = get("s");
      if (!r && !s) return true;
      if (!r || !s) return false;
      if (ipow(d, p.m - sum) != *r * ipow(x1, p.k)) return false;
      if (ipow(d, p.n - sum) != *s * ipow(y1, p.l)) return false;
      // s goes with x1^(n-k) and r with y1^(m-l); see solve_case3.
      return p.c == ipow(x1, p.n - p.k) * *s + ipow(y1, p.m - p.l) * *r;
    }

    case CaseId::Case4: {
      if (y1 != 1) return false;
      const Int* R = get("R");
      const Int* S = get("S");
      if (!R && !S) return true;
      if (!R || !S) return false;
      if (ipow(d, p.m - p.n) != *R * ipow(x1, p.n)) return false;
      if (ipow(x1, p.n) != *S * ipow(d, sum - p.n)) return false;
      if (ipow(d, p.m - sum) != *R * *S) return false;
      if (*S * (1 + *R) != p.c * ipow(x1, p.k)) return false;
      if (const Int* R1 = get("R1"))
        if (*R != *R1 * *R1) return false;
      if (const Int* S1 = get("S1"))
        if (*S != *S1 * *S1) return false;
      return true;
    }

    case CaseId::Case5: {
      if (y1 != 1) return false;
      if (const Int* r = get("r")) {
        if (ipow(x1, p.n - p.k) + *r != p.c) return false;
        if (ipow(d, p.m - p.n) != *r * ipow(x1, p.k)) return false;
      }
      if (const Int* M = get("M")) {
        // M is the largest u with u^(n-k) < c.
        if (ipow(*M, p.n - p.k) >= p.c) return false;
        if (ipow(*M + 1, p.n - p.k) < p.c) return false;
        if (x1 > *M) return false;
      }
      if (const Int* rho = get("rho")) {
        const Int* v = get("v");
        if (!v) return false;
        if (p.k != *rho * *v) return false;
        if (p.m != p.l + *rho * *v + *v) return false;
        if (p.n != *rho * *v + p.l) return false;
        if (x1 != 2) return false;
        if (d != ipow(Int(2), *rho)) return false;
      }
      return true;
    }

    case CaseId::Case6: {
      if (x1 != 1) return false;
      const Int* t = get("t");
      const Int* L = get("L");
      const Int* e1 = get("e1");
      const Int* e2 = get("e2");
      const Int* e3 = get("e3");
      if (!t && !L && !e1 && !e2 && !e3) return true;
      if (!t || !L || !e1 || !e2 || !e3) return false;
      if (*L != lcm(p.m, p.n - p.m)) return false;
      if (*e1 != (*L / p.m) * (p.n - p.m)) return false;
      if (*e2 != *L) return false;
      if (*e3 != *L + (*L / p.m) * p.l) return false;
      if (y1 != ipow(*t, *L / p.m)) return false;
      if (d != ipow(*t, *L / (p.n - p.m))) return false;
      return ipow(*t, *e1) + ipow(*t, *e2) == p.c * ipow(*t, *e3);
    }

    case CaseId::Case7:
      if (x1 != 1 || y1 != 1) return false;
      return Int(2) == p.c * ipow(d, sum - p.n);

    case CaseId::Case8: {
      if (const Int* r = get("r")) {
        if (ipow(d, p.n - sum) != ipow(x1, p.k) * ipow(y1, p.l) * *r) return false;
        if (*r * (ipow(x1, p.n) + ipow(y1, p.n)) != p.c) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool validate_witness(const EquationParams& p, const Int& x, const Int& y,
                      const Witness& w, CaseId case_id) {
  try {
    p.validate();
    if (x < 1 || y < 1) return false;
    for (const auto& [name, value] : w)
      if (value < 1) return false;

    const Int* d = find_binding(w, "d");
    const Int* x1 = find_binding(w, "x1");
    const Int* y1 = find_binding(w, "y1");
    if (!d || !x1 || !y1) return false;

    // The gcd decomposition of the paper's normalization, then the
    // equation itself, then the theorem structure.
    if (x != *d * *x1 || y != *d * *y1) return false;
    if (!coprime(*x1, *y1)) return false;
    if (!equation_holds(p, x, y)) return false;
    return case_equations_hold(p, w, case_id, *d, *x1, *y1);
  } catch (const std::exception&) {
    // Nonsensical bindings (e.g. negative exponents after tampering)
    // are invalid, not errors.
    return false;
  }
}

bool validate_solution(const CaseClassification& cls, const Solution& sol) {
  Int x = sol.x;
  Int y = sol.y;
  if (cls.swapped) std::swap(x, y);
  return validate_witness(cls.canonical, x, y, sol.witness, cls.case_id);
}

}  // namespace dioph
