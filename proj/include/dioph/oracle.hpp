#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dioph/equation.hpp"

namespace dioph {

/// Rectangle of candidate pairs for exhaustive search, with optional
/// coprimality and gcd filters.
struct SearchBox {
  Int x_max;
  Int y_max;
  bool coprime_only = false;
  std::optional<Int> gcd_max;

  void validate() const;
};

/// Square box helper.
SearchBox square_box(const Int& side);

/// Exhaustive ground truth: exactly the pairs (x, y) in the box passing
/// the filters with x^n + y^m == c * x^k * y^l, evaluated in exact
/// arithmetic, sorted lexicographically.
///
/// The unfiltered search is the plain double loop. When gcd_max is set the
/// box is walked as d = 1..gcd_max times coprime (x1, y1), which reaches
/// the same set because d = gcd(x, y) determines the decomposition.
std::vector<std::pair<Int, Int>> brute_force(const EquationParams& p,
                                             const SearchBox& box);

struct CrosscheckReport {
  // Solver pairs inside the box the oracle does not confirm. Must always
  // be empty: a non-solution was emitted.
  std::vector<std::pair<Int, Int>> soundness_failures;
  // Oracle pairs a certified (or declared-bounded) set failed to list.
  std::vector<std::pair<Int, Int>> completeness_failures;
  std::size_t solver_in_box = 0;
  std::size_t oracle_count = 0;
  double elapsed_ms = 0.0;

  bool ok() const {
    return soundness_failures.empty() && completeness_failures.empty();
  }
};

/// Compares a solver result against brute force on the box. For certified
/// kinds (Empty / Finite / ParametricDiagonal) completeness is required on
/// the whole box; for BoundedIncomplete only within the set's declared
/// gcd_bound / box_bound semantics. The set must be in the same (original)
/// orientation as p.
CrosscheckReport crosscheck(const EquationParams& p, const SearchBox& box,
                            const SolutionSet& s);

}  // namespace dioph
