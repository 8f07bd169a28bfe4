#include "dioph/equation.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

void EquationParams::validate() const {
  auto require = [](const Int& v, const char* name) {
    if (v < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
  };
  require(n, "n");
  require(m, "m");
  require(k, "k");
  require(l, "l");
  require(c, "c");
}

bool equation_holds(const EquationParams& p, const Int& x, const Int& y) {
  Int lhs = ipow(x, p.n) + ipow(y, p.m);
  Int rhs = p.c * ipow(x, p.k) * ipow(y, p.l);
  return lhs == rhs;
}

const char* case_name(CaseId id) {
  switch (id) {
    case CaseId::Case1: return "Case1";
    case CaseId::Case2: return "Case2";
    case CaseId::Case3: return "Case3";
    case CaseId::Case4: return "Case4";
    case CaseId::Case5: return "Case5";
    case CaseId::Case6: return "Case6";
    case CaseId::Case7: return "Case7";
    case CaseId::Case8: return "Case8";
  }
  return "?";
}

const char* kind_name(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::Empty: return "empty";
    case SolutionKind::Finite: return "finite_certified";
    case SolutionKind::ParametricDiagonal: return "parametric_diagonal";
    case SolutionKind::BoundedIncomplete: return "bounded_incomplete";
  }
  return "?";
}

void normalize_solutions(std::vector<Solution>& solutions) {
  std::stable_sort(solutions.begin(), solutions.end(),
                   [](const Solution& a, const Solution& b) {
                     if (a.x != b.x) return a.x < b.x;
                     return a.y < b.y;
                   });
  solutions.erase(std::unique(solutions.begin(), solutions.end(),
                              [](const Solution& a, const Solution& b) {
                                return a.x == b.x && a.y == b.y;
                              }),
                  solutions.end());
}

}  // namespace dioph
