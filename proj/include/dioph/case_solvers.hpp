#pragma once

#include "dioph/classifier.hpp"
#include "dioph/equation.hpp"

namespace dioph {

/// Solutions of (1) restricted to gcd(x, y) = 1: {(1,1)} iff c == 2,
/// empty otherwise, independent of the exponents.
SolutionSet solve_coprime(const EquationParams& p);

/// n = m = k+l. c == 2 gives the diagonal family (d, d); otherwise empty.
SolutionSet solve_case1(const EquationParams& p);

/// n < m < k+l with n <= k. c == 2 gives {(1,1)}; otherwise empty.
SolutionSet solve_case2(const EquationParams& p);

/// k+l < n < m. Certified finite enumeration over the decomposition
/// d^(m-(k+l)) = r*x1^k, d^(n-(k+l)) = s*y1^l, c = x1^(n-k)*r + y1^(m-l)*s.
SolutionSet solve_case3(const EquationParams& p);

/// n < k+l < m with n <= k. y1 = 1 is forced; solutions (d*x1, d) are
/// enumerated for d = 1..bound, so the result is complete among pairs
/// with gcd(x, y) <= bound. The two parameter tuples with a certified
/// answer -- (n,m,k,l) = (2,6,2,2) and (2,6,3,1) -- come back Finite.
SolutionSet solve_case4(const EquationParams& p, const Int& bound);

/// n = k+l < m. Certified: at most M solutions where M is the largest u
/// with u^(n-k) < c, each recovered from x1^(n-k) + r = c and
/// d^(m-n) = r*x1^k.
SolutionSet solve_case5(const EquationParams& p);

/// Theorem-6 coordinates m < n = k+l with m <= l. x1 = 1 is forced and
/// solutions reduce to t^e1 + t^e2 = c*t^e3 with L = lcm(m, n-m),
/// e1 = (L/m)(n-m), e2 = L, e3 = L + (L/m)*l.
SolutionSet solve_case6(const EquationParams& p);

/// m = n < k+l. Reduces to 2 = c*d^(k+l-n).
SolutionSet solve_case7(const EquationParams& p);

/// k+l < m = n. Certified finite enumeration over divisors r of c with
/// x1^n + y1^n = c/r and d^(n-(k+l)) = r*x1^k*y1^l.
SolutionSet solve_case8(const EquationParams& p);

struct SolveResult {
  CaseClassification classification;
  SolutionSet set;  // in the caller's original orientation
};

/// Classifies, runs the matching case solver in canonical coordinates and
/// mirrors the result back. When the governing theorem's hypothesis fails
/// (Case 2 or 4 with n > k, Case 6 with m > l) the paper is silent, so the
/// result is a bounded fallback search: complete among pairs with
/// x, y <= bound and gcd(x, y) <= bound, provenance "fallback".
SolveResult solve(const EquationParams& p, const Int& bound);

/// Fallback bound used when none is given; DIOPH_DEFAULT_BOUND overrides.
Int default_bound();

/// Re-checks a witness against the defining equations of the case's
/// theorem: the reconstruction x = d*x1, y = d*y1 with gcd(x1,y1) = 1, the
/// original equation, and every case equation whose symbols are present
/// (all of them are present in solver-emitted witnesses; fallback
/// witnesses carry only the gcd decomposition). x, y and p are in
/// canonical orientation.
bool validate_witness(const EquationParams& p, const Int& x, const Int& y,
                      const Witness& w, CaseId case_id);

/// Convenience for results of solve(): re-canonicalizes a solution that
/// may have been mirrored, then runs validate_witness.
bool validate_solution(const CaseClassification& cls, const Solution& sol);

}  // namespace dioph
