#include "dioph/integers.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool coprime(const Int& a, const Int& b) { return gcd(a, b) == 1; }

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int ipow(const Int& base, const Int& exp) {
  return ipow(base, checked_exponent(exp));
}

Int iroot_floor(const Int& v, unsigned long e) {
  Int r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), e);
  return r;
}

std::optional<Int> perfect_root(const Int& v, unsigned long e) {
  if (e == 1) return v;
  Int r = iroot_floor(v, e);
  if (ipow(r, e) == v) return r;
  return std::nullopt;
}

std::optional<Int> perfect_root(const Int& v, const Int& e) {
  return perfect_root(v, checked_exponent(e));
}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& pp : factors) v *= ipow(pp.prime, pp.exponent);
  return v;
}

namespace {

// Divides out every occurrence of p from rest, recording the exponent.
void strip_factor(Int& rest, const Int& p, std::vector<PrimePower>& out) {
  unsigned long e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  if (e > 0) out.push_back({p, e});
}

std::vector<Int> expand_divisors(const Factorization& f) {
  std::vector<Int> divs{1};
  for (const auto& pp : f.factors) {
    const std::size_t base_count = divs.size();
    Int q = 1;
    for (unsigned long e = 1; e <= pp.exponent; ++e) {
      q *= pp.prime;
      for (std::size_t i = 0; i < base_count; ++i) divs.push_back(divs[i] * q);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

Factorization factorize(const Int& v) {
  if (v < 1) throw std::invalid_argument("factorize: input must be >= 1");
  Factorization f;
  Int rest = v;
  strip_factor(rest, 2, f.factors);
  strip_factor(rest, 3, f.factors);
  // 6k+-1 wheel; inputs are desk-scale so trial division is enough.
  Int p = 5;
  unsigned step = 2;
  while (p * p <= rest) {
    strip_factor(rest, p, f.factors);
    p += step;
    step = 6 - step;
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::vector<Int> divisors(const Int& v) { return expand_divisors(factorize(v)); }

std::vector<Int> divisors_of_power(const Int& v, unsigned long e) {
  Factorization f = factorize(v);
  if (e == 0) return {Int(1)};
  for (auto& pp : f.factors) pp.exponent *= e;
  return expand_divisors(f);
}

unsigned long checked_exponent(const Int& e) {
  if (e < 0 || !e.fits_ulong_p())
    throw std::overflow_error("exponent does not fit in unsigned long");
  return e.get_ui();
}

}  // namespace dioph
