"""Orthonormal shifted Legendre polynomials on [0, 1].

``ell_j(x) = sqrt(2j+1) * P_j(2x - 1)``.  Exact work keeps the rational
polynomial ``P_j(2x-1)`` and the surd scale ``sqrt(2j+1)`` apart.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DegreeTooHigh, DomainError
from .polynomial import RationalPolynomial
from .ratmath import Matrix, Surd


def recurrence_coefficient(k: int) -> Surd:
    """``a_k = k / (2 sqrt((2k-1)(2k+1)))`` of the [0,1] three-term recurrence."""
    if k < 1:
        raise ValueError("recurrence coefficient needs k >= 1")
    m = (2 * k - 1) * (2 * k + 1)
    return Surd(Fraction(k, 2 * m), m)


def jacobi_matrix(n: int) -> Matrix:
    """Truncated n x n Jacobi matrix: 1/2 on the diagonal, a_1..a_{n-1} beside it."""
    if n < 1:
        raise ValueError("jacobi_matrix needs n >= 1")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(1, 2)
        if i + 1 < n:
            a = recurrence_coefficient(i + 1)
            rows[i][i + 1] = rows[i + 1][i] = a
    return Matrix(rows)


@lru_cache(maxsize=None)
def shifted_legendre(j: int) -> RationalPolynomial:
    """``P_j(2x - 1)`` in the monomial basis (rational coefficients)."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    if j == 0:
        return RationalPolynomial([1])
    y = RationalPolynomial([-1, 2])
    if j == 1:
        return y
    # (k+1) P_{k+1} = (2k+1) y P_k - k P_{k-1}
    k = j - 1
    return (y * shifted_legendre(k) * (2 * k + 1) - shifted_legendre(k - 1) * k) / (k + 1)


def orthonormal_scale(j: int) -> Surd:
    return Surd(1, 2 * j + 1)


def orthonormal(j: int) -> tuple[Surd, RationalPolynomial]:
    """``ell_j`` as ``(sqrt(2j+1), P_j(2x-1))``."""
    return orthonormal_scale(j), shifted_legendre(j)


def eval_orthonormal(j: int, x: float) -> float:
    """Value of ``ell_j(x)`` by the upward Legendre recurrence."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x = {x} outside [0, 1]")
    return float(eval_orthonormal_all(j + 1, np.asarray(x, dtype=float))[j])


def eval_orthonormal_all(n: int, x) -> np.ndarray:
    """Stack ``ell_0(x) .. ell_{n-1}(x)``; result has shape ``(n,) + x.shape``.

    No support check: callers mask to [0, 1] themselves.
    """
    x = np.asarray(x, dtype=float)
    y = 2.0 * x - 1.0
    out = np.empty((n,) + x.shape)
    if n == 0:
        return out
    out[0] = 1.0
    if n > 1:
        out[1] = y
    for k in range(1, n - 1):
        out[k + 1] = ((2 * k + 1) * y * out[k] - k * out[k - 1]) / (k + 1)
    scale = np.sqrt(2.0 * np.arange(n) + 1.0).reshape((n,) + (1,) * x.ndim)
    return out * scale


def integrate_monomial_product(p: RationalPolynomial, q: RationalPolynomial) -> Fraction:
    """Exact ``int_0^1 p(x) q(x) dx``."""
    total = Fraction(0)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                if b:
                    total += a * b / (i + j + 1)
    return total


@dataclass(frozen=True)
class LegendreBasis:
    """The first ``n`` orthonormal Legendre polynomials on [0, 1]."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("LegendreBasis needs n >= 1")

    def expand(self, p: RationalPolynomial) -> list[Surd]:
        return legendre_expand(p, self)

    def evaluate(self, x) -> np.ndarray:
        return eval_orthonormal_all(self.n, x)


def legendre_expand_rational(p: RationalPolynomial, n: int) -> list[Fraction]:
    """Coefficients ``b_j`` with ``p = sum b_j P_j(2x-1)`` (unnormalized basis)."""
    if p.degree >= n:
        raise DegreeTooHigh(f"degree {p.degree} does not fit in {n} basis functions")
    return [integrate_monomial_product(p, shifted_legendre(j)) * (2 * j + 1) for j in range(n)]


def legendre_expand(p: RationalPolynomial, basis: LegendreBasis | int) -> list[Surd]:
    """Exact orthonormal coefficients ``c_j = int_0^1 p ell_j``."""
    n = basis.n if isinstance(basis, LegendreBasis) else int(basis)
    if p.degree >= n:
        raise DegreeTooHigh(f"degree {p.degree} does not fit in {n} basis functions")
    return [Surd(integrate_monomial_product(p, shifted_legendre(j)), 2 * j + 1) for j in range(n)]


def from_legendre_rational(coeffs) -> RationalPolynomial:
    """Inverse of :func:`legendre_expand_rational`."""
    out = RationalPolynomial()
    for j, b in enumerate(coeffs):
        if b:
            out = out + shifted_legendre(j) * b
    return out


def gauss_legendre(m: int) -> tuple[np.ndarray, np.ndarray]:
    """``m``-point Gauss-Legendre nodes and weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(m)
    return (x + 1.0) / 2.0, w / 2.0
