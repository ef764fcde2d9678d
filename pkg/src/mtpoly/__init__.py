"""Multi-point Taylor (Hermite / osculatory) interpolation.

The explicit construction lives in mtp, two independent reference routes in
oracles, the exact combinatorial kernels and identity checkers in
combinatorics, and the CLI front end in cli."""

__version__ = "0.1.0"

from .combinatorics import (
    alternating_sum,
    alternating_sum_term,
    binomial,
    compositions,
    falling_factorial_ratio,
    identity_suite,
    multinomial,
    partial_sum_check,
    splitting_sum,
)
from .functions import AnalyticFunction, catalog, lookup, make_jets
from .mtp import (
    ConditionReport,
    JetTable,
    MtpModel,
    NodeSeparationError,
    NodeSet,
    build_mtp,
    eval_structured,
    lagrange_polynomial,
    precompute_basis_powers,
    precompute_ratio_table,
    series_coefficient,
    taylor_polynomial,
    to_monomial,
    verify_conditions,
)
from .oracles import SingularSystemError, hermite_vandermonde_solve, newton_hermite
from .poly import Polynomial
from .problem import Problem, ProblemFormatError, load_problem, parse_problem
from .scalars import FLOATING, RATIONAL

__all__ = [
    "AnalyticFunction",
    "ConditionReport",
    "FLOATING",
    "JetTable",
    "MtpModel",
    "NodeSeparationError",
    "NodeSet",
    "Polynomial",
    "Problem",
    "ProblemFormatError",
    "RATIONAL",
    "SingularSystemError",
    "alternating_sum",
    "alternating_sum_term",
    "binomial",
    "build_mtp",
    "catalog",
    "compositions",
    "eval_structured",
    "falling_factorial_ratio",
    "hermite_vandermonde_solve",
    "identity_suite",
    "lagrange_polynomial",
    "load_problem",
    "lookup",
    "make_jets",
    "multinomial",
    "newton_hermite",
    "parse_problem",
    "partial_sum_check",
    "precompute_basis_powers",
    "precompute_ratio_table",
    "series_coefficient",
    "splitting_sum",
    "taylor_polynomial",
    "to_monomial",
    "verify_conditions",
]
