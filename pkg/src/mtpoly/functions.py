"""Catalog of test functions with closed-form n-th derivatives.

Names are the stable identifiers problem files refer to. Polynomial entries
carry exact=True and may feed rational-mode runs; the transcendental entries
are floating-only."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .mtp import JetTable, NodeSet
from .poly import Polynomial
from .scalars import RATIONAL


@dataclass(frozen=True)
class AnalyticFunction:
    name: str
    value_at: Callable
    nth_derivative_at: Callable
    exact: bool = False

    def jet(self, x, k: int) -> tuple:
        return tuple(self.nth_derivative_at(n, x) for n in range(k + 1))


def _polynomial_function(name: str, coefficients) -> AnalyticFunction:
    base = Polynomial(coefficients, RATIONAL)
    derivatives = [base]

    def nth(n, x):
        while len(derivatives) <= n:
            derivatives.append(derivatives[-1].derivative())
        return derivatives[n].eval(x)

    return AnalyticFunction(name, base.eval, nth, exact=True)


def _sin_nth(n, x):
    cycle = (math.sin, math.cos, lambda t: -math.sin(t), lambda t: -math.cos(t))
    return cycle[n % 4](x)


def _cos_nth(n, x):
    return _sin_nth(n + 1, x)


# 1/(1+x^2) differentiates to P_n(x)/(1+x^2)^(n+1) with the numerators
# following P_{n+1} = (1+x^2) P_n' - 2(n+1) x P_n from the quotient rule.
_runge_numerators = [Polynomial((1,), RATIONAL)]
_ONE_PLUS_X2 = Polynomial((1, 0, 1), RATIONAL)
_X = Polynomial((0, 1), RATIONAL)


def _runge_nth(n, x):
    while len(_runge_numerators) <= n:
        i = len(_runge_numerators) - 1
        p = _runge_numerators[-1]
        _runge_numerators.append(
            _ONE_PLUS_X2.mul(p.derivative()).sub(_X.mul(p).scale(2 * (i + 1)))
        )
    return _runge_numerators[n].eval(x) / (1 + x * x) ** (n + 1)


_CATALOG = (
    AnalyticFunction("exp", math.exp, lambda n, x: math.exp(x)),
    AnalyticFunction("sin", math.sin, _sin_nth),
    AnalyticFunction("cos", math.cos, _cos_nth),
    AnalyticFunction("runge", lambda x: 1.0 / (1.0 + x * x), _runge_nth),
    _polynomial_function("cubic", (0, 0, 0, 1)),
    _polynomial_function("parabola", (1, 0, 1)),
)


def catalog() -> tuple[AnalyticFunction, ...]:
    """All known functions: exp, sin, cos, runge = 1/(1+x^2), cubic = x^3,
    parabola = 1 + x^2."""
    return _CATALOG


def lookup(name: str) -> AnalyticFunction:
    for f in _CATALOG:
        if f.name == name:
            return f
    known = ", ".join(f.name for f in _CATALOG)
    raise KeyError(f"unknown function {name!r}; catalog has: {known}")


def make_jets(f: AnalyticFunction, nodes: NodeSet, k: int) -> JetTable:
    """Jet table with entry (i, n) = f^(n)(a_i).

    Rational nodes are refused for non-exact functions: values like exp(1)
    have no exact rational representation, and coercing them would silently
    corrupt the exactness guarantees downstream.
    """
    if k < 0:
        raise ValueError(f"order k must be >= 0, got {k}")
    if nodes.mode == RATIONAL and not f.exact:
        raise ValueError(f"function {f.name!r} cannot produce exact rational jets")
    rows = tuple(f.jet(a, k) for a in nodes.nodes)
    return JetTable(rows, nodes.mode)
