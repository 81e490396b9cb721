"""Dense univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .errors import OddPowerEncountered


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class RationalPolynomial:
    """``sum(c[k] * x**k)``; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c=1) -> "RationalPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "RationalPolynomial":
        return self + (-other)

    def __rsub__(self, other) -> "RationalPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if not self or not other:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "RationalPolynomial":
        return self * (1 / Fraction(scalar))

    def __pow__(self, e: int) -> "RationalPolynomial":
        out = RationalPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation: exact for rational ``x``, mpmath for mpf, float otherwise."""
        if isinstance(x, (int, Fraction)):
            cs = self.coeffs
            acc = Fraction(0)
        elif isinstance(x, mpmath.mpf):
            cs = [mpmath.mpf(c.numerator) / c.denominator for c in self.coeffs]
            acc = mpmath.mpf(0)
        else:
            cs = [float(c) for c in self.coeffs]
            acc = 0.0 * x
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def divide_by_x(self) -> "RationalPolynomial":
        """Exact division by x; the constant term must vanish."""
        if self[0]:
            raise OddPowerEncountered("division by x leaves a negative power")
        return RationalPolynomial(self.coeffs[1:])

    def times_x(self, k: int = 1) -> "RationalPolynomial":
        if not self:
            return self
        return RationalPolynomial([0] * k + list(self.coeffs))

    def reflect(self) -> "RationalPolynomial":
        """``x -> p(-x)``."""
        return RationalPolynomial([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def compose_affine(self, a, b) -> "RationalPolynomial":
        """``x -> p(a*x + b)``."""
        lin = RationalPolynomial([b, a])
        out = RationalPolynomial()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def antiderivative(self) -> "RationalPolynomial":
        return RationalPolynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def integrate(self, lo=0, hi=1) -> Fraction:
        """Exact definite integral over ``[lo, hi]``."""
        P = self.antiderivative()
        return P(Fraction(hi)) - P(Fraction(lo))

    def integral_01(self) -> Fraction:
        return sum((c / (k + 1) for k, c in enumerate(self.coeffs)), Fraction(0))

    def is_even(self) -> bool:
        return all(not c for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(not c for c in self.coeffs[0::2])

    def __repr__(self) -> str:
        if not self.coeffs:
            return "RationalPolynomial(0)"
        terms = [f"{c}*x^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return "RationalPolynomial(" + " + ".join(terms) + ")"


X = RationalPolynomial([0, 1])
