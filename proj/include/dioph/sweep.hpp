#pragma once

#include <iosfwd>
#include <string>

#include "dioph/report.hpp"

namespace dioph {

/// Inclusive parameter intervals for a grid replay, plus the oracle box
/// side, the fallback bound and where the JSONL report goes.
struct SweepSpec {
  Int n_lo = 1, n_hi = 1;
  Int m_lo = 1, m_hi = 1;
  Int k_lo = 1, k_hi = 1;
  Int l_lo = 1, l_hi = 1;
  Int c_lo = 1, c_hi = 1;
  Int box = 300;
  Int bound = 200;
  std::string out_path;

  void validate() const;  // throws std::invalid_argument
};

struct SweepTotals {
  std::size_t instances = 0;
  std::size_t certified = 0;  // Empty / Finite / ParametricDiagonal results
  std::size_t bounded = 0;
  std::size_t soundness_failures = 0;
  std::size_t completeness_failures = 0;
  double elapsed_ms = 0.0;

  bool ok() const { return soundness_failures == 0 && completeness_failures == 0; }
};

/// Solves and cross-checks every instance of the grid in ascending
/// (n, m, k, l, c) order, writing one InstanceReport JSON object per line
/// followed by a summary line keyed "summary". Output is written by a
/// single writer in deterministic instance order; rerunning the same spec
/// overwrites the file with the same line order.
SweepTotals run_sweep(const SweepSpec& spec, std::ostream& out);

}  // namespace dioph
