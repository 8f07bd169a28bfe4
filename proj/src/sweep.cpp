#include "dioph/sweep.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

namespace dioph {

void SweepSpec::validate() const {
  auto interval = [](const Int& lo, const Int& hi, const char* name) {
    if (lo < 1) throw std::invalid_argument(std::string(name) + " range must start >= 1");
    if (hi < lo) throw std::invalid_argument(std::string(name) + " range is empty");
  };
  interval(n_lo, n_hi, "n");
  interval(m_lo, m_hi, "m");
  interval(k_lo, k_hi, "k");
  interval(l_lo, l_hi, "l");
  interval(c_lo, c_hi, "c");
  if (box < 1) throw std::invalid_argument("box must be >= 1");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
}

SweepTotals run_sweep(const SweepSpec& spec, std::ostream& out) {
  spec.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const SearchBox box = square_box(spec.box);

  SweepTotals totals;
  for (Int n = spec.n_lo; n <= spec.n_hi; ++n)
    for (Int m = spec.m_lo; m <= spec.m_hi; ++m)
      for (Int k = spec.k_lo; k <= spec.k_hi; ++k)
        for (Int l = spec.l_lo; l <= spec.l_hi; ++l)
          for (Int c = spec.c_lo; c <= spec.c_hi; ++c) {
            const EquationParams p{n, m, k, l, c};
            InstanceReport rep = report_instance(p, spec.bound, box);
            ++totals.instances;
            if (rep.set.kind == SolutionKind::BoundedIncomplete)
              ++totals.bounded;
            else
              ++totals.certified;
            totals.soundness_failures += rep.check->soundness_failures.size();
            totals.completeness_failures += rep.check->completeness_failures.size();
            out << to_json(rep).dump() << "\n";
          }

  totals.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  out << nlohmann::json{
             {"summary",
              {{"instances", totals.instances},
               {"certified", totals.certified},
               {"bounded", totals.bounded},
               {"soundness_failures", totals.soundness_failures},
               {"completeness_failures", totals.completeness_failures},
               {"elapsed_ms", totals.elapsed_ms}}}}
             .dump()
      << "\n";
  return totals;
}

}  // namespace dioph
