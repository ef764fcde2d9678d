"""Integer and rational combinatorial kernels, plus standalone checkers for the
cancellation identities that make multi-point derivative matching work.

Everything here is exact: integers are arbitrary precision and the few
non-integer quantities are `fractions.Fraction`. No floats ever enter."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence


def binomial(n: int, r: int) -> int:
    """C(n, r) for n >= 0, with the usual convention C(n, r) = 0 outside 0 <= r <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (j_1! ... j_m!) for a composition (j_1, ..., j_m) of n.

    A composition whose parts do not sum to n indicates a caller bug, so it is
    rejected rather than silently normalized.
    """
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be non-negative, got {tuple(parts)}")
    if sum(parts) != n:
        raise ValueError(f"composition {tuple(parts)} does not sum to n={n}")
    result = math.factorial(n)
    for p in parts:
        result //= math.factorial(p)
    return result


def compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Yield every tuple of m non-negative integers summing to n, exactly once.

    Order is fixed and lexicographic with the first part descending, e.g.
    compositions(2, 2) yields (2,0), (1,1), (0,2). There are C(n+m-1, m-1)
    tuples in total.
    """
    if n < 0:
        raise ValueError(f"compositions needs n >= 0, got n={n}")
    if m < 1:
        raise ValueError(f"compositions needs m >= 1, got m={m}")
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest


def falling_factorial_ratio(k: int, j: int) -> int:
    """(k+j)!/k! as the product (k+1)(k+2)...(k+j), avoiding full factorials."""
    if k < 0 or j < 0:
        raise ValueError(f"falling_factorial_ratio needs k, j >= 0, got k={k}, j={j}")
    result = 1
    for t in range(k + 1, k + j + 1):
        result *= t
    return result


def splitting_sum(k: int, parts: Sequence[int]) -> int:
    """Signed sum over all ways of splitting each part s_v into j_v + k_v of

        prod_v (-1)^(k_v) * C(k + j_v, j_v) * C(k+1, k_v).

    This is the coefficient that multiplies each mixed derivative product when
    the matching conditions are expanded; it equals 1 when all parts are zero
    and vanishes whenever 1 <= sum(parts) <= k, which is exactly the
    cancellation that leaves only the sought derivative behind.
    """
    if k < 0:
        raise ValueError(f"splitting_sum needs k >= 0, got k={k}")
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be non-negative, got {tuple(parts)}")
    total = 0
    for ks in itertools.product(*(range(s + 1) for s in parts)):
        term = 1
        for s, kv in zip(parts, ks):
            jv = s - kv
            term *= (-1) ** kv * binomial(k + jv, jv) * binomial(k + 1, kv)
        total += term
    return total


def alternating_sum(n: int, k: int) -> int:
    """The alternating binomial sum

        sum_{q=0}^{n+1} (-1)^q * C(k+n+1-q, n+1-q) * C(k+1, q).

    Computes the raw value without asserting anything about it; the identity
    suite checks nullity over the claimed range 1 <= n <= k.
    """
    if n < 0 or k < 0:
        raise ValueError(f"alternating_sum needs n, k >= 0, got n={n}, k={k}")
    return sum(
        (-1) ** q * binomial(k + n + 1 - q, n + 1 - q) * binomial(k + 1, q)
        for q in range(n + 2)
    )


def alternating_sum_term(n: int, k: int, q: int) -> Fraction:
    """Single term of the alternating sum in its rearranged form

        ((k+1)/(n+1)) * (-1)^q * C(k+n+1-q, n) * C(n+1, q),

    which must agree with the raw term (-1)^q * C(k+n+1-q, n+1-q) * C(k+1, q)
    for every q in [0, n+1]. Returned as an exact rational.
    """
    if n < 0 or k < 0:
        raise ValueError(f"alternating_sum_term needs n, k >= 0, got n={n}, k={k}")
    if not 0 <= q <= n + 1:
        raise ValueError(f"q={q} outside [0, {n + 1}]")
    sign = -1 if q % 2 else 1
    return Fraction(k + 1, n + 1) * sign * binomial(k + n + 1 - q, n) * binomial(n + 1, q)


def partial_sum_check(n: int, k: int, p: int) -> bool:
    """Check the closed form of the partial sums of the alternating series:

        sum_{q=0}^{p+1} T_n(q) == -((p+2)(k+n-p) / ((n+1)(k+1))) * T_n(p+2)

    with T_n the rearranged term, evaluated in exact rationals. Admissible
    inputs are 1 <= n <= k and 0 <= p <= n-1; p = n is rejected because the
    right-hand side would need a term past the end of the series.
    """
    if not 1 <= n <= k:
        raise ValueError(f"need 1 <= n <= k, got n={n}, k={k}")
    if not 0 <= p <= n - 1:
        raise ValueError(f"p={p} outside [0, {n - 1}]")
    lhs = sum(alternating_sum_term(n, k, q) for q in range(p + 2))
    rhs = -Fraction((p + 2) * (k + n - p), (n + 1) * (k + 1)) * alternating_sum_term(n, k, p + 2)
    return lhs == rhs


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one identity family: case count, failure count, first offenders."""

    name: str
    cases: int
    failures: int
    failing: tuple = ()


def identity_suite(n_max: int = 6, k_max: int = 6, m_max: int = 4) -> tuple[IdentityCheck, ...]:
    """Run every identity family exhaustively over the given bounds.

    Families:
      * splitting_sum == 0 for 1 <= sum(parts) <= k over 1..m_max-1 slots
      * splitting_sum == 1 for all-zero parts
      * alternating_sum == 0 for 1 <= n <= k (within n_max, k_max)
      * rearranged term == raw term for all q
      * partial-sum closed form for all admissible (n, k, p)
    """
    if n_max < 1 or k_max < 1 or m_max < 1:
        raise ValueError("bounds must be positive")
    checks = []

    cases = failures = 0
    failing = []
    for slots in range(1, m_max):
        for k in range(1, k_max + 1):
            for total in range(1, min(n_max, k) + 1):
                for parts in compositions(total, slots):
                    cases += 1
                    if splitting_sum(k, parts) != 0:
                        failures += 1
                        if len(failing) < 5:
                            failing.append((k, parts))
    checks.append(IdentityCheck("splitting_sum_zero", cases, failures, tuple(failing)))

    cases = failures = 0
    failing = []
    for slots in range(1, m_max):
        for k in range(0, k_max + 1):
            cases += 1
            if splitting_sum(k, (0,) * slots) != 1:
                failures += 1
                if len(failing) < 5:
                    failing.append((k, slots))
    checks.append(IdentityCheck("splitting_sum_unit", cases, failures, tuple(failing)))

    cases = failures = 0
    failing = []
    for k in range(1, k_max + 1):
        for n in range(1, min(n_max, k) + 1):
            cases += 1
            if alternating_sum(n, k) != 0:
                failures += 1
                if len(failing) < 5:
                    failing.append((n, k))
    checks.append(IdentityCheck("alternating_sum_zero", cases, failures, tuple(failing)))

    cases = failures = 0
    failing = []
    for n in range(0, n_max + 1):
        for k in range(0, k_max + 1):
            for q in range(0, n + 2):
                cases += 1
                sign = -1 if q % 2 else 1
                raw = sign * binomial(k + n + 1 - q, n + 1 - q) * binomial(k + 1, q)
                if alternating_sum_term(n, k, q) != raw:
                    failures += 1
                    if len(failing) < 5:
                        failing.append((n, k, q))
    checks.append(IdentityCheck("term_rearrangement", cases, failures, tuple(failing)))

    cases = failures = 0
    failing = []
    for k in range(1, k_max + 1):
        for n in range(1, min(n_max, k) + 1):
            for p in range(0, n):
                cases += 1
                if not partial_sum_check(n, k, p):
                    failures += 1
                    if len(failing) < 5:
                        failing.append((n, k, p))
    checks.append(IdentityCheck("partial_sum_closed_form", cases, failures, tuple(failing)))

    return tuple(checks)
