#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph/integers.hpp"

namespace dioph {

/// Data describing the complete positive solution set of x^a = y^b:
/// the one-parameter family (x, y) = (t^b1, t^a1), t = 1, 2, 3, ...
struct PowerEqParametrization {
  Int a;
  Int b;
  Int d;   // gcd(a, b)
  Int a1;  // a/d == lcm(a,b)/b
  Int b1;  // b/d == lcm(a,b)/a
};

/// Decomposes (a, b) into the family exponents. a, b >= 1.
PowerEqParametrization parametrize(const Int& a, const Int& b);

/// The family members for t = 1..t_max, ascending in both coordinates.
std::vector<std::pair<Int, Int>> enumerate_solutions(
    const PowerEqParametrization& p, const Int& t_max);

/// Recovers t with (x, y) = (t^b1, t^a1), taking the b1-th root of x and
/// cross-checking against y. Absent exactly when (x, y) does not solve
/// x^a = y^b.
std::optional<Int> recover_parameter(const Int& x, const Int& y,
                                     const PowerEqParametrization& p);

/// Display form of the family, e.g. "(t^3, t^2)"; exponent 1 is plain "t".
std::string family_string(const PowerEqParametrization& p);

}  // namespace dioph
