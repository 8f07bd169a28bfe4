#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dioph/integers.hpp"

namespace dioph {

/// The five defining integers of x^n + y^m = c * x^k * y^l.
/// All fields must be >= 1; validate() enforces that.
struct EquationParams {
  Int n;  // exponent of x on the left
  Int m;  // exponent of y on the left
  Int k;  // exponent of x on the right
  Int l;  // exponent of y on the right
  Int c;  // right-hand coefficient

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  /// The x<->y mirror image: (m, n, l, k, c).
  EquationParams swapped() const { return {m, n, l, k, c}; }

  bool operator==(const EquationParams&) const = default;
};

/// Exact check of x^n + y^m == c * x^k * y^l for positive x, y.
bool equation_holds(const EquationParams& p, const Int& x, const Int& y);

/// The eight exponent cases, keyed by how n, m and k+l compare.
enum class CaseId {
  Case1 = 1,  // n = m = k+l
  Case2,      // n < m < k+l
  Case3,      // k+l < n < m
  Case4,      // n < k+l < m
  Case5,      // n = k+l < m
  Case6,      // m < n = k+l   (canonical orientation; see classifier)
  Case7,      // m = n < k+l
  Case8,      // k+l < m = n
};

const char* case_name(CaseId id);

struct CaseClassification {
  CaseId case_id;
  bool swapped;         // true when x and y were exchanged to canonicalize
  bool hypothesis_met;  // false when the governing theorem's side condition fails
  EquationParams canonical;
};

/// Named integer bindings certifying one solution through a theorem's
/// conditions. Recognized names: d, x1, y1, r, s, R, S, R1, S1, M, L,
/// e1, e2, e3, rho, v, t. Bindings always refer to the *canonical*
/// orientation of the instance.
using Witness = std::map<std::string, Int>;

enum class SolutionKind {
  Empty,               // certified: no solutions exist
  Finite,              // certified: the listed solutions are all of them
  ParametricDiagonal,  // (d, d) for every d >= 1, and nothing else
  BoundedIncomplete,   // complete only under the declared bounds
};

/// Wire names used in JSON output.
const char* kind_name(SolutionKind kind);

struct Solution {
  Int x;
  Int y;
  Witness witness;
};

/// A solver verdict. For BoundedIncomplete the list is complete among
/// pairs with gcd(x,y) <= gcd_bound, further restricted to
/// x,y <= box_bound when that is set (the bounded fallback search).
struct SolutionSet {
  SolutionKind kind = SolutionKind::Empty;
  std::vector<Solution> solutions;
  std::optional<Int> gcd_bound;
  std::optional<Int> box_bound;
  std::string provenance;  // theorem tag + clause, or "fallback"
};

/// Sorts lexicographically by (x, y) and drops duplicate pairs,
/// keeping the first witness seen for each pair.
void normalize_solutions(std::vector<Solution>& solutions);

}  // namespace dioph
