#include "dioph/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace dioph {

void SearchBox::validate() const {
  if (x_max < 1) throw std::invalid_argument("xmax must be >= 1");
  if (y_max < 1) throw std::invalid_argument("ymax must be >= 1");
  if (gcd_max && *gcd_max < 1) throw std::invalid_argument("gcdmax must be >= 1");
}

SearchBox square_box(const Int& side) { return {side, side, false, std::nullopt}; }

namespace {

using Pair = std::pair<Int, Int>;

// Power table x -> x^e for x = 1..max (index 0 unused).
std::vector<Int> pow_table(const Int& max, unsigned long e) {
  std::vector<Int> t(max.get_ui() + 1);
  for (unsigned long x = 1; x <= max.get_ui(); ++x) t[x] = ipow(Int(x), e);
  return t;
}

std::vector<Pair> scan_full(const EquationParams& p, const SearchBox& box) {
  // Boxes beyond ulong range are not enumerable anyway.
  if (!box.x_max.fits_ulong_p() || !box.y_max.fits_ulong_p())
    throw std::invalid_argument("search box too large to enumerate");
  const unsigned long xm = box.x_max.get_ui();
  const unsigned long ym = box.y_max.get_ui();

  const auto xn = pow_table(box.x_max, checked_exponent(p.n));
  const auto ymt = pow_table(box.y_max, checked_exponent(p.m));
  auto cxk = pow_table(box.x_max, checked_exponent(p.k));
  for (auto& v : cxk) v *= p.c;
  const auto yl = pow_table(box.y_max, checked_exponent(p.l));

  std::vector<Pair> found;
  Int lhs, rhs, g;
  for (unsigned long x = 1; x <= xm; ++x) {
    for (unsigned long y = 1; y <= ym; ++y) {
      mpz_add(lhs.get_mpz_t(), xn[x].get_mpz_t(), ymt[y].get_mpz_t());
      mpz_mul(rhs.get_mpz_t(), cxk[x].get_mpz_t(), yl[y].get_mpz_t());
      if (mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t()) != 0) continue;
      if (box.coprime_only || box.gcd_max) {
        mpz_gcd_ui(g.get_mpz_t(), Int(x).get_mpz_t(), y);
        if (box.coprime_only && g != 1) continue;
        if (box.gcd_max && g > *box.gcd_max) continue;
      }
      found.emplace_back(x, y);
    }
  }
  return found;  // already lexicographic
}

std::vector<Pair> scan_gcd_decomposed(const EquationParams& p, const SearchBox& box) {
  std::vector<Pair> found;
  for (Int d = 1; d <= *box.gcd_max; ++d) {
    if (box.coprime_only && d != 1) break;
    for (Int x1 = 1; d * x1 <= box.x_max; ++x1) {
      const Int x = d * x1;
      for (Int y1 = 1; d * y1 <= box.y_max; ++y1) {
        if (!coprime(x1, y1)) continue;  // d is then exactly gcd(x, y)
        const Int y = d * y1;
        if (equation_holds(p, x, y)) found.emplace_back(x, y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<Pair> brute_force(const EquationParams& p, const SearchBox& box) {
  p.validate();
  box.validate();
  if (box.gcd_max && *box.gcd_max < box.x_max && *box.gcd_max < box.y_max)
    return scan_gcd_decomposed(p, box);
  return scan_full(p, box);
}

CrosscheckReport crosscheck(const EquationParams& p, const SearchBox& box,
                            const SolutionSet& s) {
  const auto t0 = std::chrono::steady_clock::now();
  CrosscheckReport report;

  const std::vector<Pair> oracle = brute_force(p, box);
  report.oracle_count = oracle.size();

  // Solver pairs as concrete points inside the box.
  std::vector<Pair> solver;
  if (s.kind == SolutionKind::ParametricDiagonal) {
    for (Int d = 1; d <= box.x_max && d <= box.y_max; ++d) solver.emplace_back(d, d);
  } else {
    for (const Solution& sol : s.solutions)
      if (sol.x <= box.x_max && sol.y <= box.y_max) solver.emplace_back(sol.x, sol.y);
  }
  std::sort(solver.begin(), solver.end());
  report.solver_in_box = solver.size();

  std::set_difference(solver.begin(), solver.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(report.soundness_failures));

  // Completeness within the set's declared reach.
  std::vector<Pair> expected;
  if (s.kind == SolutionKind::BoundedIncomplete) {
    for (const Pair& pr : oracle) {
      if (s.gcd_bound && gcd(pr.first, pr.second) > *s.gcd_bound) continue;
      if (s.box_bound && (pr.first > *s.box_bound || pr.second > *s.box_bound)) continue;
      expected.push_back(pr);
    }
  } else {
    expected = oracle;
  }
  std::set_difference(expected.begin(), expected.end(), solver.begin(), solver.end(),
                      std::back_inserter(report.completeness_failures));

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace dioph
