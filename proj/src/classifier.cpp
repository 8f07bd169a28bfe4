#include "dioph/classifier.hpp"

#include <cassert>
#include <utility>

namespace dioph {

namespace {

// Case from the order relations among min(n,m), max(n,m) and k+l.
// The swap never changes k+l, so this is orientation-free.
CaseId case_of(const EquationParams& p) {
  const Int lo = std::min(p.n, p.m);
  const Int hi = std::max(p.n, p.m);
  const Int s = p.k + p.l;
  if (lo == hi) {
    if (s == lo) return CaseId::Case1;
    if (s > lo) return CaseId::Case7;
    return CaseId::Case8;
  }
  if (s < lo) return CaseId::Case3;
  if (s == lo) return CaseId::Case5;
  if (s < hi) return CaseId::Case4;
  if (s == hi) return CaseId::Case6;
  return CaseId::Case2;
}

bool canonical_relation_holds(CaseId id, const EquationParams& p) {
  const Int s = p.k + p.l;
  switch (id) {
    case CaseId::Case1: return p.n == p.m && p.m == s;
    case CaseId::Case2: return p.n < p.m && p.m < s;
    case CaseId::Case3: return s < p.n && p.n < p.m;
    case CaseId::Case4: return p.n < s && s < p.m;
    case CaseId::Case5: return p.n == s && s < p.m;
    case CaseId::Case6: return p.m < p.n && p.n == s;
    case CaseId::Case7: return p.m == p.n && p.n < s;
    case CaseId::Case8: return s < p.m && p.m == p.n;
  }
  return false;
}

}  // namespace

CaseClassification classify(const EquationParams& p) {
  p.validate();
  const CaseId id = case_of(p);

  bool swapped = false;
  EquationParams canonical = p;
  if (p.n != p.m) {
    // Case 6 canonicalizes to m < n = k+l; everything else to n < m.
    const bool want_n_greater = (id == CaseId::Case6);
    const bool n_greater = p.n > p.m;
    if (n_greater != want_n_greater) {
      canonical = p.swapped();
      swapped = true;
    }
  }

  bool hypothesis_met = true;
  switch (id) {
    case CaseId::Case2:
    case CaseId::Case4:
      hypothesis_met = canonical.n <= canonical.k;
      break;
    case CaseId::Case6:
      hypothesis_met = canonical.m <= canonical.l;
      break;
    default:
      break;
  }

  assert(canonical_relation_holds(id, canonical));
  return {id, swapped, hypothesis_met, std::move(canonical)};
}

SolutionSet unswap_solutions(SolutionSet s, bool swapped) {
  if (!swapped) return s;
  for (Solution& sol : s.solutions) std::swap(sol.x, sol.y);
  normalize_solutions(s.solutions);
  return s;
}

}  // namespace dioph
