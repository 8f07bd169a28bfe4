#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dioph/case_solvers.hpp"
#include "dioph/oracle.hpp"
#include "dioph/power_equation.hpp"

namespace dioph {

/// Everything known about one solved instance; the unit of JSONL output.
struct InstanceReport {
  EquationParams params;
  CaseClassification classification;
  SolutionSet set;
  std::optional<CrosscheckReport> check;
  double elapsed_ms = 0.0;
};

/// Solves and, when box is given, cross-checks one instance.
InstanceReport report_instance(const EquationParams& p, const Int& bound,
                               const std::optional<SearchBox>& box);

// JSON conventions: every Int is a decimal string so output never depends
// on consumer integer width; counts are plain numbers.
nlohmann::json to_json(const Int& v);
nlohmann::json to_json(const EquationParams& p);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const SolutionSet& s);
nlohmann::json to_json(const CrosscheckReport& r);
nlohmann::json to_json(const InstanceReport& r);
nlohmann::json to_json(const PowerEqParametrization& p);

/// Fixed-width human-readable rendering of a report.
std::string render_table(const InstanceReport& r);

}  // namespace dioph
