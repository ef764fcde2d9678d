"""Multi-point Taylor (Hermite / osculatory) interpolation in explicit form.

Given m pairwise-distinct nodes and, at every node, the derivative values of
orders 0..k, the interpolant of degree at most mk+m-1 is assembled directly:

    P(x) = sum_g  B_g(x) * sum_n  (x - a_g)^n / n! * F[g][n]

where B_g is the (k+1)-th power of the g-th Lagrange basis factor and F[g][n]
is a constant built from a multinomial sum over the jets (see
series_coefficient). Both a structured evaluator and a full monomial
expansion are provided; the node-independent pieces (basis powers and the
falling-factorial ratio tables) are precomputed once per model."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .combinatorics import compositions, falling_factorial_ratio, multinomial
from .poly import Polynomial
from .scalars import RATIONAL, Scalar, check_mode, coerce, one, zero

DEFAULT_EPS_SEP = 1e-10


class NodeSeparationError(ValueError):
    """Nodes coincide (rational mode) or sit closer than the separation guard."""


@dataclass(frozen=True)
class NodeSet:
    """The m interpolation nodes, pairwise distinct under the mode's rule.

    In floating mode nodes closer than eps_sep are rejected outright: the
    formula degrades without warning for near-coincident nodes, so refusing
    beats returning garbage.
    """

    nodes: tuple
    mode: str = RATIONAL
    eps_sep: float = DEFAULT_EPS_SEP

    def __post_init__(self):
        check_mode(self.mode)
        values = tuple(coerce(a, self.mode) for a in self.nodes)
        object.__setattr__(self, "nodes", values)
        if not values:
            raise ValueError("node set must contain at least one node")
        if self.eps_sep < 0:
            raise ValueError("eps_sep must be non-negative")
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                gap = abs(values[i] - values[j])
                if self.mode == RATIONAL:
                    if gap == 0:
                        raise NodeSeparationError(
                            f"nodes {i} and {j} coincide at {values[i]}"
                        )
                elif gap < self.eps_sep:
                    raise NodeSeparationError(
                        f"nodes {i} and {j} are {gap!r} apart, below eps_sep={self.eps_sep!r}"
                    )

    @property
    def m(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class JetTable:
    """Derivative values: row i holds f(a_i), f'(a_i), ..., f^(k)(a_i)."""

    values: tuple
    mode: str = RATIONAL

    def __post_init__(self):
        check_mode(self.mode)
        rows = tuple(tuple(coerce(v, self.mode) for v in row) for row in self.values)
        object.__setattr__(self, "values", rows)
        if not rows:
            raise ValueError("jet table must have at least one row")
        width = len(rows[0])
        if width < 1:
            raise ValueError("jet rows must contain at least the value entry")
        if any(len(row) != width for row in rows):
            raise ValueError("all jet rows must have the same length k+1")

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def order(self) -> int:
        return len(self.values[0]) - 1


@dataclass(frozen=True)
class MtpModel:
    """Assembled interpolant: nodes, order, coefficient table and precomputed parts.

    basis_powers[g] is the (k+1)-th power of the g-th Lagrange factor, of
    degree exactly (m-1)(k+1); ratio_tables[g] maps (l, j) with l != g to
    (k+j)!/k! * (a_l - a_g)^(-j). Treat all fields as read-only.
    """

    nodes: NodeSet
    order: int
    series_table: tuple
    basis_powers: tuple
    ratio_tables: tuple

    @property
    def mode(self) -> str:
        return self.nodes.mode


def _ratio_entry(nodes: NodeSet, k: int, g: int, l: int, j: int) -> Scalar:
    # Single shared path so cached tables and on-the-fly use are bit-identical;
    # the power is taken of the node difference itself, never of its reciprocal.
    diff = nodes.nodes[l] - nodes.nodes[g]
    return falling_factorial_ratio(k, j) / diff**j


def precompute_ratio_table(nodes: NodeSet, k: int, g: int) -> dict:
    """Table of (k+j)!/k! * (a_l - a_g)^(-j) for every l != g and j in 0..k."""
    if not 0 <= g < nodes.m:
        raise IndexError(f"node index g={g} outside 0..{nodes.m - 1}")
    return {
        (l, j): _ratio_entry(nodes, k, g, l, j)
        for l in range(nodes.m)
        if l != g
        for j in range(k + 1)
    }


def series_coefficient(
    nodes: NodeSet,
    jets: JetTable,
    g: int,
    n: int,
    ratio_table: Mapping | None = None,
) -> Scalar:
    """Constant multiplying (x - a_g)^n / n! in the node-g block:

        sum over compositions j_1+...+j_m = n of
            multinomial(n; j) * f^(j_g)(a_g) * prod_{l != g} (k+j_l)!/k! * (a_l-a_g)^(-j_l).

    With a precomputed ratio table the result is identical bit for bit to the
    on-the-fly computation. For n = 0 this is f(a_g); for m = 1 it is
    f^(n)(a_1).
    """
    m = nodes.m
    k = jets.order
    if not 0 <= g < m:
        raise IndexError(f"node index g={g} outside 0..{m - 1}")
    if not 0 <= n <= k:
        raise IndexError(f"derivative order n={n} outside 0..{k}")
    total = zero(nodes.mode)
    for parts in compositions(n, m):
        term = multinomial(n, parts) * jets.values[g][parts[g]]
        for l, j in enumerate(parts):
            if l == g or j == 0:
                continue
            if ratio_table is not None:
                term = term * ratio_table[(l, j)]
            else:
                term = term * _ratio_entry(nodes, k, g, l, j)
        total = total + term
    return total


def precompute_basis_powers(nodes: NodeSet, k: int) -> tuple:
    """For each node g, [prod_{h != g} (x - a_h)/(a_g - a_h)]^(k+1) expanded
    to monomial form. For m = 1 every entry is the constant polynomial 1."""
    if k < 0:
        raise ValueError(f"order k must be >= 0, got {k}")
    mode = nodes.mode
    out = []
    for g, a in enumerate(nodes.nodes):
        factor = Polynomial((1,), mode)
        for h, b in enumerate(nodes.nodes):
            if h == g:
                continue
            inv = one(mode) / (a - b)
            factor = factor.mul(Polynomial((-b * inv, inv), mode))
        out.append(factor.pow(k + 1))
    return tuple(out)


def build_mtp(nodes: NodeSet, jets: JetTable) -> MtpModel:
    """Assemble the full model: ratio tables, coefficient table, basis powers."""
    if nodes.mode != jets.mode:
        raise ValueError(f"mixed scalar modes: nodes {nodes.mode}, jets {jets.mode}")
    if nodes.m != jets.m:
        raise ValueError(f"{nodes.m} nodes but {jets.m} jet rows")
    k = jets.order
    tables = tuple(precompute_ratio_table(nodes, k, g) for g in range(nodes.m))
    series = tuple(
        tuple(series_coefficient(nodes, jets, g, n, tables[g]) for n in range(k + 1))
        for g in range(nodes.m)
    )
    return MtpModel(
        nodes=nodes,
        order=k,
        series_table=series,
        basis_powers=precompute_basis_powers(nodes, k),
        ratio_tables=tables,
    )


def eval_structured(model: MtpModel, x) -> Scalar:
    """Evaluate in structured form, without expanding to monomials.

    Preferred in floating mode: the high powers stay factored, so fewer
    cancellations than evaluating the expanded polynomial.
    """
    total = zero(model.mode)
    for g, a in enumerate(model.nodes.nodes):
        dx = x - a
        inner = zero(model.mode)
        t = one(model.mode)
        for n in range(model.order + 1):
            inner = inner + t * model.series_table[g][n]
            t = t * dx / (n + 1)
        total = total + model.basis_powers[g].eval(x) * inner
    return total


def to_monomial(model: MtpModel) -> Polynomial:
    """Expand the model to a dense monomial polynomial of degree <= mk+m-1.

    Preferred in rational mode, where expansion is exact and repeated
    differentiation is cheapest on the monomial form.
    """
    mode = model.mode
    total = Polynomial((), mode)
    for g, a in enumerate(model.nodes.nodes):
        shift = Polynomial((-a, 1), mode)
        inner = Polynomial((), mode)
        power = Polynomial((1,), mode)
        factorial = 1
        for n in range(model.order + 1):
            if n:
                factorial *= n
            inner = inner.add(power.scale(model.series_table[g][n] / factorial))
            power = power.mul(shift)
        total = total.add(model.basis_powers[g].mul(inner))
    return total


@dataclass(frozen=True)
class ConditionResidual:
    """One derivative-matching condition: expected jet value vs. the model."""

    node_index: int
    order: int
    expected: Scalar
    actual: Scalar
    abs_residual: Scalar
    rel_residual: Scalar


@dataclass(frozen=True)
class ConditionReport:
    rows: tuple
    tolerance: Scalar
    passed: bool

    @property
    def max_abs_residual(self) -> Scalar:
        return max(row.abs_residual for row in self.rows)


def verify_conditions(model: MtpModel, jets: JetTable, tolerance) -> ConditionReport:
    """Check P^(n)(a_i) against every jet entry and report the residuals.

    A failing report is a value, not an error. In rational mode the tolerance
    must be exactly zero: the match is exact or it is a bug.
    """
    if model.mode == RATIONAL and tolerance != 0:
        raise ValueError("rational mode verifies exactly; tolerance must be 0")
    if jets.m != model.nodes.m or jets.order != model.order:
        raise ValueError("jet table shape does not match the model")
    p = to_monomial(model)
    rows = []
    for i, a in enumerate(model.nodes.nodes):
        for n in range(model.order + 1):
            expected = jets.values[i][n]
            actual = p.nth_derivative_at(n, a)
            abs_res = abs(actual - expected)
            if abs_res == 0:
                rel = zero(model.mode)
            elif expected != 0:
                rel = abs_res / abs(expected)
            else:
                rel = math.inf
            rows.append(ConditionResidual(i, n, expected, actual, abs_res, rel))
    passed = all(row.abs_residual <= tolerance for row in rows)
    return ConditionReport(rows=tuple(rows), tolerance=tolerance, passed=passed)


def taylor_polynomial(center, jet: Sequence, mode: str = RATIONAL) -> Polynomial:
    """Single-point truncation sum_n (x - a)^n / n! * f^(n)(a) in monomial form."""
    check_mode(mode)
    center = coerce(center, mode)
    shift = Polynomial((-center, 1), mode)
    total = Polynomial((), mode)
    power = Polynomial((1,), mode)
    factorial = 1
    for n, value in enumerate(jet):
        if n:
            factorial *= n
        total = total.add(power.scale(coerce(value, mode) / factorial))
        power = power.mul(shift)
    return total


def lagrange_polynomial(nodes: NodeSet, values: Sequence) -> Polynomial:
    """Classical value-only interpolant sum_g prod_{h != g} (x-a_h)/(a_g-a_h) * f(a_g)."""
    if len(values) != nodes.m:
        raise ValueError(f"{nodes.m} nodes but {len(values)} values")
    mode = nodes.mode
    total = Polynomial((), mode)
    for g, a in enumerate(nodes.nodes):
        basis = Polynomial((1,), mode)
        for h, b in enumerate(nodes.nodes):
            if h == g:
                continue
            inv = one(mode) / (a - b)
            basis = basis.mul(Polynomial((-b * inv, inv), mode))
        total = total.add(basis.scale(values[g]))
    return total
