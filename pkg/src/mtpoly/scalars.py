"""Scalar field plumbing: every computation runs either over exact rationals
(`fractions.Fraction`, arbitrary precision) or over binary floats, selected by
a mode tag that travels with each value container."""

from __future__ import annotations

from fractions import Fraction

RATIONAL = "rational"
FLOATING = "floating"
MODES = (RATIONAL, FLOATING)

Scalar = Fraction | float


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"unknown scalar mode {mode!r}, expected one of {MODES}")
    return mode


def coerce(value, mode: str) -> Scalar:
    """Convert a number into the given mode's scalar type."""
    if mode == RATIONAL:
        return value if isinstance(value, Fraction) else Fraction(value)
    if mode == FLOATING:
        return float(value)
    raise ValueError(f"unknown scalar mode {mode!r}")


def zero(mode: str) -> Scalar:
    return Fraction(0) if mode == RATIONAL else 0.0


def one(mode: str) -> Scalar:
    return Fraction(1) if mode == RATIONAL else 1.0


def parse(text: str, mode: str) -> Scalar:
    """Parse a scalar literal: "p/q" or decimal in rational mode, float otherwise."""
    if mode == RATIONAL:
        return Fraction(text)
    if mode == FLOATING:
        return float(text)
    raise ValueError(f"unknown scalar mode {mode!r}")


def fmt(value: Scalar) -> str:
    """Lossless text form: "p/q" for rationals, shortest round-trip decimal for floats."""
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))
