#pragma once

#include "dioph/equation.hpp"

namespace dioph {

/// Validates p, applies the x<->y symmetry at most once to reach the
/// canonical orientation, and assigns exactly one of the eight cases.
///
/// Cases 1-5, 7, 8 are canonicalized with n <= m. Case 6 is canonicalized
/// in Theorem-6 coordinates (m < n = k+l), since that is where the
/// constructive result lives; the swap flips (n,m,k,l) to (m,n,l,k).
///
/// hypothesis_met is false exactly when the governing theorem has a side
/// condition the canonical instance violates: Case 2 or 4 with n > k,
/// Case 6 with m > l.
CaseClassification classify(const EquationParams& p);

/// Mirrors a solution set back to the caller's orientation: each pair
/// (x, y) becomes (y, x) when swapped is true; diagonal families are
/// fixed points. Witnesses are left untouched -- they certify the
/// solution in canonical coordinates.
SolutionSet unswap_solutions(SolutionSet s, bool swapped);

}  // namespace dioph
