#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "dioph/case_solvers.hpp"
#include "dioph/oracle.hpp"
#include "dioph/power_equation.hpp"
#include "dioph/report.hpp"

namespace py = pybind11;

// mpz_class <-> python int, routed through decimal strings so values of any
// size survive the crossing exactly.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* text = PyObject_Str(src.ptr());
    if (!text) {
      PyErr_Clear();
      return false;
    }
    const char* utf8 = PyUnicode_AsUTF8(text);
    bool ok = utf8 != nullptr;
    if (ok) {
      try {
        value = mpz_class(utf8);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
    }
    Py_DECREF(text);
    if (!ok) PyErr_Clear();
    return ok;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

dioph::CaseId case_from_name(const std::string& name) {
  for (int id = 1; id <= 8; ++id) {
    const auto curr = static_cast<dioph::CaseId>(id);
    if (name == dioph::case_name(curr)) return curr;
  }
  throw py::value_error("unknown case name: " + name);
}

std::vector<std::pair<dioph::Int, unsigned long>> factor_pairs(const dioph::Int& v) {
  std::vector<std::pair<dioph::Int, unsigned long>> out;
  for (const auto& pp : dioph::factorize(v).factors)
    out.emplace_back(pp.prime, pp.exponent);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "certified solver for x^n + y^m = c * x^k * y^l over positive integers";

  // integer primitives
  m.def("gcd", &dioph::gcd, py::arg("a"), py::arg("b"));
  m.def("lcm", &dioph::lcm, py::arg("a"), py::arg("b"));
  m.def("coprime", &dioph::coprime, py::arg("a"), py::arg("b"));
  m.def(
      "ipow",
      [](const dioph::Int& base, const dioph::Int& exp) {
        if (exp < 0) throw py::value_error("exp must be >= 0");
        return dioph::ipow(base, exp);
      },
      py::arg("base"), py::arg("exp"));
  m.def(
      "perfect_root",
      [](const dioph::Int& v, const dioph::Int& e) {
        if (e < 1) throw py::value_error("e must be >= 1");
        return dioph::perfect_root(v, e);
      },
      py::arg("v"), py::arg("e"), "u with u^e == v, or None");
  m.def("divisors", &dioph::divisors, py::arg("v"));
  m.def("factorize", &factor_pairs, py::arg("v"),
        "ascending list of (prime, exponent) pairs");

  // x^a = y^b
  py::class_<dioph::PowerEqParametrization>(m, "PowerEqParametrization")
      .def_readonly("a", &dioph::PowerEqParametrization::a)
      .def_readonly("b", &dioph::PowerEqParametrization::b)
      .def_readonly("d", &dioph::PowerEqParametrization::d)
      .def_readonly("a1", &dioph::PowerEqParametrization::a1)
      .def_readonly("b1", &dioph::PowerEqParametrization::b1)
      .def_property_readonly("family", &dioph::family_string)
      .def("__repr__", [](const dioph::PowerEqParametrization& p) {
        return "PowerEqParametrization(a=" + p.a.get_str() +
               ", b=" + p.b.get_str() + ", family=" + dioph::family_string(p) +
               ")";
      });
  m.def("parametrize", &dioph::parametrize, py::arg("a"), py::arg("b"));
  m.def("enumerate_solutions", &dioph::enumerate_solutions, py::arg("p"),
        py::arg("t_max"));
  m.def("recover_parameter", &dioph::recover_parameter, py::arg("x"),
        py::arg("y"), py::arg("p"));

  // equation instances and classification
  py::class_<dioph::EquationParams>(m, "EquationParams")
      .def(py::init([](const dioph::Int& n, const dioph::Int& m_,
                       const dioph::Int& k, const dioph::Int& l,
                       const dioph::Int& c) {
             dioph::EquationParams p{n, m_, k, l, c};
             p.validate();
             return p;
           }),
           py::arg("n"), py::arg("m"), py::arg("k"), py::arg("l"), py::arg("c"))
      .def_readonly("n", &dioph::EquationParams::n)
      .def_readonly("m", &dioph::EquationParams::m)
      .def_readonly("k", &dioph::EquationParams::k)
      .def_readonly("l", &dioph::EquationParams::l)
      .def_readonly("c", &dioph::EquationParams::c)
      .def("swapped", &dioph::EquationParams::swapped)
      .def("__eq__", [](const dioph::EquationParams& a,
                        const dioph::EquationParams& b) { return a == b; })
      .def("__repr__", [](const dioph::EquationParams& p) {
        return "EquationParams(n=" + p.n.get_str() + ", m=" + p.m.get_str() +
               ", k=" + p.k.get_str() + ", l=" + p.l.get_str() +
               ", c=" + p.c.get_str() + ")";
      });

  py::class_<dioph::CaseClassification>(m, "CaseClassification")
      .def_property_readonly("case",
                             [](const dioph::CaseClassification& c) {
                               return std::string(dioph::case_name(c.case_id));
                             })
      .def_readonly("swapped", &dioph::CaseClassification::swapped)
      .def_readonly("hypothesis_met", &dioph::CaseClassification::hypothesis_met)
      .def_readonly("canonical", &dioph::CaseClassification::canonical)
      .def("__repr__", [](const dioph::CaseClassification& c) {
        return std::string("CaseClassification(") + dioph::case_name(c.case_id) +
               (c.swapped ? ", swapped" : "") +
               (c.hypothesis_met ? "" : ", hypothesis not met") + ")";
      });
  m.def("classify", &dioph::classify, py::arg("params"));

  py::class_<dioph::Solution>(m, "Solution")
      .def_readonly("x", &dioph::Solution::x)
      .def_readonly("y", &dioph::Solution::y)
      .def_readonly("witness", &dioph::Solution::witness)
      .def("__repr__", [](const dioph::Solution& s) {
        return "Solution(" + s.x.get_str() + ", " + s.y.get_str() + ")";
      });

  py::class_<dioph::SolutionSet>(m, "SolutionSet")
      .def_property_readonly("kind",
                             [](const dioph::SolutionSet& s) {
                               return std::string(dioph::kind_name(s.kind));
                             })
      .def_readonly("solutions", &dioph::SolutionSet::solutions)
      .def_readonly("gcd_bound", &dioph::SolutionSet::gcd_bound)
      .def_readonly("box_bound", &dioph::SolutionSet::box_bound)
      .def_readonly("provenance", &dioph::SolutionSet::provenance)
      .def_property_readonly("pairs",
                             [](const dioph::SolutionSet& s) {
                               std::vector<std::pair<dioph::Int, dioph::Int>> out;
                               for (const auto& sol : s.solutions)
                                 out.emplace_back(sol.x, sol.y);
                               return out;
                             })
      .def("__repr__", [](const dioph::SolutionSet& s) {
        return "SolutionSet(" + std::string(dioph::kind_name(s.kind)) + ", " +
               std::to_string(s.solutions.size()) + " solution(s))";
      });

  // solvers
  m.def(
      "solve",
      [](const dioph::EquationParams& p, std::optional<dioph::Int> bound) {
        const auto res = dioph::solve(p, bound ? *bound : dioph::default_bound());
        return py::make_tuple(res.classification, res.set);
      },
      py::arg("params"), py::arg("bound") = std::nullopt,
      "returns (classification, solution_set) in the caller's orientation");
  m.def("solve_coprime", &dioph::solve_coprime, py::arg("params"),
        "solutions restricted to gcd(x, y) = 1");
  m.def("default_bound", &dioph::default_bound);

  // oracle
  py::class_<dioph::SearchBox>(m, "SearchBox")
      .def(py::init([](const dioph::Int& x_max, const dioph::Int& y_max,
                       bool coprime_only, std::optional<dioph::Int> gcd_max) {
             dioph::SearchBox b{x_max, y_max, coprime_only, gcd_max};
             b.validate();
             return b;
           }),
           py::arg("x_max"), py::arg("y_max"), py::arg("coprime_only") = false,
           py::arg("gcd_max") = std::nullopt)
      .def_readonly("x_max", &dioph::SearchBox::x_max)
      .def_readonly("y_max", &dioph::SearchBox::y_max)
      .def_readonly("coprime_only", &dioph::SearchBox::coprime_only)
      .def_readonly("gcd_max", &dioph::SearchBox::gcd_max);

  m.def("brute_force", &dioph::brute_force, py::arg("params"), py::arg("box"),
        "exhaustive solutions in the box, lexicographic");

  py::class_<dioph::CrosscheckReport>(m, "CrosscheckReport")
      .def_readonly("soundness_failures", &dioph::CrosscheckReport::soundness_failures)
      .def_readonly("completeness_failures",
                    &dioph::CrosscheckReport::completeness_failures)
      .def_readonly("solver_in_box", &dioph::CrosscheckReport::solver_in_box)
      .def_readonly("oracle_count", &dioph::CrosscheckReport::oracle_count)
      .def_readonly("elapsed_ms", &dioph::CrosscheckReport::elapsed_ms)
      .def("ok", &dioph::CrosscheckReport::ok)
      .def("__repr__", [](const dioph::CrosscheckReport& r) {
        return "CrosscheckReport(" +
               std::to_string(r.soundness_failures.size()) + " soundness, " +
               std::to_string(r.completeness_failures.size()) +
               " completeness failure(s))";
      });
  m.def("crosscheck", &dioph::crosscheck, py::arg("params"), py::arg("box"),
        py::arg("solution_set"));

  // witnesses
  m.def(
      "validate_witness",
      [](const dioph::EquationParams& p, const dioph::Int& x, const dioph::Int& y,
         const dioph::Witness& w, const std::string& case_id) {
        return dioph::validate_witness(p, x, y, w, case_from_name(case_id));
      },
      py::arg("params"), py::arg("x"), py::arg("y"), py::arg("witness"),
      py::arg("case_id"),
      "re-checks the theorem's defining equations in canonical coordinates");
  m.def("validate_solution", &dioph::validate_solution, py::arg("classification"),
        py::arg("solution"));

  // stable JSON view of a full report, matching the CLI's --json output
  m.def(
      "report_json",
      [](const dioph::EquationParams& p, std::optional<dioph::Int> bound,
         std::optional<dioph::Int> box) {
        std::optional<dioph::SearchBox> sb;
        if (box) sb = dioph::square_box(*box);
        const auto rep = dioph::report_instance(
            p, bound ? *bound : dioph::default_bound(), sb);
        return dioph::to_json(rep).dump();
      },
      py::arg("params"), py::arg("bound") = std::nullopt,
      py::arg("box") = std::nullopt);
}
