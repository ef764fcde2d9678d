"""Independent reference constructions of the same interpolant.

Two deliberately separate routes: a direct linear solve of the
derivative-matching conditions on monomial coefficients (confluent
Vandermonde system), and the classical Newton form on generalized divided
differences with each node repeated k+1 times. By uniqueness all routes must
agree with the explicit construction; nothing from mtp's coefficient code is
reused here, only the shared polynomial arithmetic."""

from __future__ import annotations

import math
from fractions import Fraction

from .mtp import JetTable, NodeSet
from .poly import Polynomial
from .scalars import RATIONAL

class SingularSystemError(ValueError):
    """The condition system has no unique solution."""


def condition_system(nodes: NodeSet, jets: JetTable):
    """Matrix and right-hand side of the derivative-matching conditions.

    Row for condition (i, n) has entries d!/(d-n)! * a_i^(d-n) over monomial
    degrees d = 0..m(k+1)-1; the unknowns are the monomial coefficients.
    """
    if nodes.m != jets.m:
        raise ValueError(f"{nodes.m} nodes but {jets.m} jet rows")
    if nodes.mode != jets.mode:
        raise ValueError("nodes and jets must share a scalar mode")
    k = jets.order
    size = nodes.m * (k + 1)
    matrix = []
    rhs = []
    for i, a in enumerate(nodes.nodes):
        for n in range(k + 1):
            row = []
            for d in range(size):
                if d < n:
                    row.append(a * 0)
                else:
                    row.append(math.perm(d, n) * a ** (d - n))
            matrix.append(row)
            rhs.append(jets.values[i][n])
    return matrix, rhs


def _solve_bareiss(matrix, rhs):
    # Fraction entries are scaled row-wise to integers, then eliminated
    # fraction-free: every interior division is exact, which keeps the
    # intermediate entries from exploding the way naive cross-multiplication
    # would.
    n = len(matrix)
    aug = []
    for row, b in zip(matrix, rhs):
        entries = [Fraction(x) for x in row] + [Fraction(b)]
        scale = math.lcm(*(e.denominator for e in entries))
        aug.append([int(e * scale) for e in entries])
    prev = 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularSystemError(f"no pivot in column {col}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        for r in range(col + 1, n):
            for c in range(col + 1, n + 1):
                aug[r][c] = (aug[col][col] * aug[r][c] - aug[r][col] * aug[col][c]) // prev
            aug[r][col] = 0
        prev = aug[col][col]
    solution = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = Fraction(aug[r][n])
        for c in range(r + 1, n):
            acc -= aug[r][c] * solution[c]
        solution[r] = acc / aug[r][r]
    return solution


def _solve_partial_pivot(matrix, rhs):
    n = len(matrix)
    aug = [list(map(float, row)) + [float(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if aug[pivot_row][col] == 0.0:
            raise SingularSystemError(f"no pivot in column {col}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        for r in range(col + 1, n):
            factor = aug[r][col] / aug[col][col]
            if factor == 0.0:
                continue
            for c in range(col, n + 1):
                aug[r][c] -= factor * aug[col][c]
    solution = [0.0] * n
    for r in range(n - 1, -1, -1):
        acc = aug[r][n]
        for c in range(r + 1, n):
            acc -= aug[r][c] * solution[c]
        solution[r] = acc / aug[r][r]
    return solution


def hermite_vandermonde_solve(nodes: NodeSet, jets: JetTable) -> Polynomial:
    """Solve the derivative-matching conditions directly for the coefficients.

    Exact fraction-free elimination in rational mode, partial pivoting in
    floating mode. Raises SingularSystemError if no unique solution exists,
    which for distinct nodes can only happen through floating degeneracy.
    """
    matrix, rhs = condition_system(nodes, jets)
    if nodes.mode == RATIONAL:
        solution = _solve_bareiss(matrix, rhs)
    else:
        solution = _solve_partial_pivot(matrix, rhs)
    return Polynomial(solution, nodes.mode)


def newton_hermite(nodes: NodeSet, jets: JetTable) -> Polynomial:
    """Newton form on generalized divided differences, expanded to monomials.

    The node sequence repeats a_1 k+1 times, then a_2, and so on; a divided
    difference spanning only copies of one node is f^(r)(a)/r!. Repetition
    order is fixed so the tables are reproducible, though any order yields
    the same polynomial.
    """
    if nodes.m != jets.m:
        raise ValueError(f"{nodes.m} nodes but {jets.m} jet rows")
    if nodes.mode != jets.mode:
        raise ValueError("nodes and jets must share a scalar mode")
    k = jets.order
    owner = [i for i in range(nodes.m) for _ in range(k + 1)]
    z = [nodes.nodes[i] for i in owner]
    size = len(z)
    column = [jets.values[i][0] for i in owner]
    newton_coeffs = [column[0]]
    factorial = 1
    for order in range(1, size):
        factorial *= order
        nxt = []
        for i in range(size - order):
            if owner[i + order] == owner[i]:
                nxt.append(jets.values[owner[i]][order] / factorial)
            else:
                nxt.append((column[i + 1] - column[i]) / (z[i + order] - z[i]))
        column = nxt
        newton_coeffs.append(column[0])
    total = Polynomial((), nodes.mode)
    basis = Polynomial((1,), nodes.mode)
    for j, coeff in enumerate(newton_coeffs):
        total = total.add(basis.scale(coeff))
        if j < size - 1:
            basis = basis.mul(Polynomial((-z[j], 1), nodes.mode))
    return total
