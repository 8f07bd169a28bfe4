#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace dioph {

/// Arbitrary-precision integer. Every solver-path quantity is an Int;
/// fixed-width arithmetic is reserved for loop counters that cannot grow.
using Int = mpz_class;

/// Greatest common divisor of two positive integers.
Int gcd(const Int& a, const Int& b);

/// Least common multiple; satisfies gcd(a,b) * lcm(a,b) == a*b.
Int lcm(const Int& a, const Int& b);

/// True iff gcd(a,b) == 1.
bool coprime(const Int& a, const Int& b);

/// Exact base^exp; exp == 0 yields 1.
Int ipow(const Int& base, unsigned long exp);
Int ipow(const Int& base, const Int& exp);

/// Largest u >= 0 with u^e <= v. Integer Newton iteration inside GMP;
/// no floating point anywhere.
Int iroot_floor(const Int& v, unsigned long e);

/// The u with u^e == v when v is a perfect e-th power, absent otherwise.
/// e >= 1; e == 1 returns v. The candidate root is re-raised and compared,
/// so the result is exact by construction.
std::optional<Int> perfect_root(const Int& v, unsigned long e);
std::optional<Int> perfect_root(const Int& v, const Int& e);

struct PrimePower {
  Int prime;
  unsigned long exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Canonical prime factorization: primes strictly increasing,
/// product of prime^exponent reconstructs the input.
struct Factorization {
  std::vector<PrimePower> factors;

  /// Rebuilds the factored value (1 for an empty list).
  Int value() const;
};

/// Factorize v >= 1 by trial division with a 2/3 wheel up to sqrt(v).
/// v == 1 yields an empty factor list.
Factorization factorize(const Int& v);

/// All positive divisors of v, ascending. divisors(1) == {1}.
std::vector<Int> divisors(const Int& v);

/// Divisors of v^e, ascending, computed by scaling the exponents of
/// factorize(v) so v^e itself is never trial-divided.
std::vector<Int> divisors_of_power(const Int& v, unsigned long e);

/// Narrow an Int exponent to unsigned long; throws std::overflow_error
/// when it does not fit (exponents that large are outside desk scale).
unsigned long checked_exponent(const Int& e);

}  // namespace dioph
