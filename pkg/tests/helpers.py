"""Shared generators for randomized exact-rational test instances."""

from fractions import Fraction

from mtpoly.mtp import JetTable, NodeSet
from mtpoly.scalars import RATIONAL


def random_fraction(rng, max_numerator=100, max_denominator=100) -> Fraction:
    return Fraction(
        rng.randint(-max_numerator, max_numerator),
        rng.randint(1, max_denominator),
    )


def random_nodes(rng, m: int) -> NodeSet:
    """m distinct rationals in [-3, 3] with numerator/denominator <= 300/100."""
    values: list[Fraction] = []
    while len(values) < m:
        candidate = Fraction(rng.randint(-300, 300), rng.randint(1, 100))
        if all(candidate != v for v in values):
            values.append(candidate)
    return NodeSet(tuple(values), RATIONAL)


def random_jets(rng, m: int, k: int) -> JetTable:
    rows = tuple(
        tuple(random_fraction(rng) for _ in range(k + 1)) for _ in range(m)
    )
    return JetTable(rows, RATIONAL)


def random_instance(rng, m: int, k: int):
    nodes = random_nodes(rng, m)
    return nodes, random_jets(rng, m, k)
