#include "dioph/report.hpp"

#include <chrono>
#include <sstream>

namespace dioph {

using nlohmann::json;

InstanceReport report_instance(const EquationParams& p, const Int& bound,
                               const std::optional<SearchBox>& box) {
  const auto t0 = std::chrono::steady_clock::now();
  InstanceReport rep;
  rep.params = p;
  SolveResult res = solve(p, bound);
  rep.classification = std::move(res.classification);
  rep.set = std::move(res.set);
  if (box) rep.check = crosscheck(p, *box, rep.set);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

json to_json(const Int& v) { return v.get_str(); }

json to_json(const EquationParams& p) {
  return json{{"n", to_json(p.n)},
              {"m", to_json(p.m)},
              {"k", to_json(p.k)},
              {"l", to_json(p.l)},
              {"c", to_json(p.c)}};
}

json to_json(const Witness& w) {
  json j = json::object();
  for (const auto& [name, value] : w) j[name] = to_json(value);
  return j;
}

json to_json(const SolutionSet& s) {
  json j;
  j["kind"] = kind_name(s.kind);
  j["provenance"] = s.provenance;
  json sols = json::array();
  for (const Solution& sol : s.solutions)
    sols.push_back(json{{"x", to_json(sol.x)},
                        {"y", to_json(sol.y)},
                        {"witness", to_json(sol.witness)}});
  j["solutions"] = std::move(sols);
  if (s.kind == SolutionKind::ParametricDiagonal)
    j["family"] = "(d, d) for every positive integer d";
  if (s.gcd_bound) j["gcd_bound"] = to_json(*s.gcd_bound);
  if (s.box_bound) j["box_bound"] = to_json(*s.box_bound);
  return j;
}

json to_json(const CrosscheckReport& r) {
  auto pairs = [](const std::vector<std::pair<Int, Int>>& v) {
    json arr = json::array();
    for (const auto& [x, y] : v)
      arr.push_back(json{{"x", to_json(x)}, {"y", to_json(y)}});
    return arr;
  };
  return json{{"oracle_count", r.oracle_count},
              {"solver_in_box", r.solver_in_box},
              {"soundness_failures", pairs(r.soundness_failures)},
              {"completeness_failures", pairs(r.completeness_failures)},
              {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const InstanceReport& r) {
  json j;
  j["params"] = to_json(r.params);
  j["case"] = case_name(r.classification.case_id);
  j["swapped"] = r.classification.swapped;
  j["hypothesis_met"] = r.classification.hypothesis_met;
  json set = to_json(r.set);
  j.update(set);  // kind, provenance, solutions, bounds at the top level
  if (r.check) j["oracle"] = to_json(*r.check);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json to_json(const PowerEqParametrization& p) {
  return json{{"a", to_json(p.a)},   {"b", to_json(p.b)},
              {"d", to_json(p.d)},   {"a1", to_json(p.a1)},
              {"b1", to_json(p.b1)}, {"family", family_string(p)}};
}

std::string render_table(const InstanceReport& r) {
  std::ostringstream out;
  auto row = [&](const char* key, const std::string& value) {
    out << "  " << key;
    for (std::size_t i = std::string(key).size(); i < 16; ++i) out << ' ';
    out << value << "\n";
  };
  const EquationParams& p = r.params;
  row("equation", "x^" + p.n.get_str() + " + y^" + p.m.get_str() + " = " +
                      p.c.get_str() + " * x^" + p.k.get_str() + " * y^" +
                      p.l.get_str());
  row("case", case_name(r.classification.case_id));
  row("swapped", r.classification.swapped ? "true" : "false");
  row("hypothesis_met", r.classification.hypothesis_met ? "true" : "false");
  row("kind", kind_name(r.set.kind));
  row("provenance", r.set.provenance);
  if (r.set.gcd_bound) row("gcd_bound", r.set.gcd_bound->get_str());
  if (r.set.box_bound) row("box_bound", r.set.box_bound->get_str());
  if (r.set.kind == SolutionKind::ParametricDiagonal) {
    row("family", "(d, d) for every positive integer d");
  } else {
    row("solutions", std::to_string(r.set.solutions.size()));
    for (const Solution& sol : r.set.solutions) {
      std::string line = "(" + sol.x.get_str() + ", " + sol.y.get_str() + ")";
      for (std::size_t i = line.size(); i < 20; ++i) line += ' ';
      line += "witness:";
      for (const auto& [name, value] : sol.witness)
        line += " " + name + "=" + value.get_str();
      row("", line);
    }
  }
  if (r.check) {
    row("oracle_count", std::to_string(r.check->oracle_count));
    row("discrepancies",
        std::to_string(r.check->soundness_failures.size()) + " soundness, " +
            std::to_string(r.check->completeness_failures.size()) +
            " completeness");
  }
  return out.str();
}

}  // namespace dioph
