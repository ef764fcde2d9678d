"""Dense monomial-basis polynomials over a tagged scalar field.

Coefficients are stored constant term first: (1, 10, 5) is 1 + 10x + 5x^2.
Construction strips trailing exact zeros; the zero polynomial has an empty
coefficient tuple and degree -inf. Lossy trimming of small floating
coefficients never happens implicitly, only through trimmed()."""

from __future__ import annotations

from .scalars import FLOATING, RATIONAL, check_mode, coerce, zero

NEG_INFINITY_DEGREE = float("-inf")


class Polynomial:
    __slots__ = ("coefficients", "mode")

    def __init__(self, coefficients=(), mode: str = RATIONAL):
        check_mode(mode)
        coeffs = [coerce(c, mode) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.mode == other.mode and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.mode, self.coefficients))

    def __repr__(self):
        return f"Polynomial({list(self.coefficients)!r}, mode={self.mode!r})"

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self):
        """Index of the last nonzero coefficient; -inf for the zero polynomial."""
        if not self.coefficients:
            return NEG_INFINITY_DEGREE
        return len(self.coefficients) - 1

    def trimmed(self, threshold: float) -> "Polynomial":
        """Copy with trailing coefficients of magnitude <= threshold removed."""
        coeffs = list(self.coefficients)
        while coeffs and abs(coeffs[-1]) <= threshold:
            coeffs.pop()
        return Polynomial(coeffs, self.mode)

    def eval(self, x):
        """Horner evaluation; exact when both operands are rational."""
        acc = zero(self.mode)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(
            [c * i for i, c in enumerate(self.coefficients) if i >= 1], self.mode
        )

    def nth_derivative_at(self, n: int, x):
        """Differentiate n times, then evaluate at x."""
        if n < 0:
            raise ValueError(f"derivative order must be >= 0, got {n}")
        p = self
        for _ in range(n):
            p = p.derivative()
        return p.eval(x)

    def _check_same_mode(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.mode != self.mode:
            raise ValueError(f"mixed scalar modes: {self.mode} vs {other.mode}")

    def add(self, other: "Polynomial") -> "Polynomial":
        self._check_same_mode(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        coeffs = list(a)
        for i, c in enumerate(b):
            coeffs[i] = coeffs[i] + c
        return Polynomial(coeffs, self.mode)

    def sub(self, other: "Polynomial") -> "Polynomial":
        return self.add(other.scale(-1))

    def scale(self, s) -> "Polynomial":
        s = coerce(s, self.mode)
        return Polynomial([c * s for c in self.coefficients], self.mode)

    def mul(self, other: "Polynomial") -> "Polynomial":
        self._check_same_mode(other)
        if self.is_zero() or other.is_zero():
            return Polynomial((), self.mode)
        a, b = self.coefficients, other.coefficients
        coeffs = [zero(self.mode)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                coeffs[i + j] += ca * cb
        return Polynomial(coeffs, self.mode)

    def pow(self, e: int) -> "Polynomial":
        """Non-negative integer power by repeated squaring; exact in rational mode."""
        if e < 0:
            raise ValueError(f"exponent must be >= 0, got {e}")
        result = Polynomial((1,), self.mode)
        base = self
        while e:
            if e & 1:
                result = result.mul(base)
            base = base.mul(base)
            e >>= 1
        return result

    __add__ = add
    __sub__ = sub
    __mul__ = mul


def finite_difference(f, x: float, step: float = 1e-5) -> float:
    """Central-difference first derivative estimate, for floating cross-checks."""
    return (f(x + step) - f(x - step)) / (2.0 * step)


__all__ = [
    "Polynomial",
    "NEG_INFINITY_DEGREE",
    "finite_difference",
    "RATIONAL",
    "FLOATING",
]
