"""Certified solver for the Diophantine equation x^n + y^m = c * x^k * y^l
over positive integers.

The heavy lifting lives in the compiled extension ``dioph._core``; this
package re-exports its public surface.
"""

from dioph._core import (
    CaseClassification,
    CrosscheckReport,
    EquationParams,
    PowerEqParametrization,
    SearchBox,
    Solution,
    SolutionSet,
    brute_force,
    classify,
    coprime,
    crosscheck,
    default_bound,
    divisors,
    enumerate_solutions,
    factorize,
    gcd,
    ipow,
    lcm,
    parametrize,
    perfect_root,
    recover_parameter,
    report_json,
    solve,
    solve_coprime,
    validate_solution,
    validate_witness,
)

__version__ = "0.1.0"

__all__ = [
    "CaseClassification",
    "CrosscheckReport",
    "EquationParams",
    "PowerEqParametrization",
    "SearchBox",
    "Solution",
    "SolutionSet",
    "brute_force",
    "classify",
    "coprime",
    "crosscheck",
    "default_bound",
    "divisors",
    "enumerate_solutions",
    "factorize",
    "gcd",
    "ipow",
    "lcm",
    "parametrize",
    "perfect_root",
    "recover_parameter",
    "report_json",
    "solve",
    "solve_coprime",
    "validate_solution",
    "validate_witness",
    "__version__",
]
