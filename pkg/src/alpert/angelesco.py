"""Legendre-Angelesco multiple orthogonal polynomials.

The two measures are the uniform measures on [-1, 0] and [0, 1].  Everything
here is exact rational arithmetic: glued integrals over [-1, 1] are split at
0 and integrated termwise, no quadrature.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional

from .errors import NotProportional, SingularMomentSystem
from .polynomial import RationalPolynomial, X
from .ratmath import Matrix, SingularMatrix, solve_linear


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial ``(a)_n`` for rational ``a``."""
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def half_binomial(n: int, shift) -> Fraction:
    """``binom(n + shift, n) = (shift + 1)_n / n!`` for rational ``shift``."""
    return pochhammer(Fraction(shift) + 1, n) / factorial(n)


def _family(n: int, offset: int) -> RationalPolynomial:
    # sum_k C(n,k) C(n + (k+offset)/2, n) (-1)^(n-k) x^k
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return RationalPolynomial(
        comb(n, k) * half_binomial(n, Fraction(k + offset, 2)) * (-1) ** (n - k) for k in range(n + 1)
    )


@lru_cache(maxsize=None)
def p_poly(n: int) -> RationalPolynomial:
    return _family(n, 0)


@lru_cache(maxsize=None)
def q_poly(n: int) -> RationalPolynomial:
    return _family(n, -1)


@lru_cache(maxsize=None)
def r_poly(n: int) -> RationalPolynomial:
    return _family(n, 1)


def mellin_p(n: int, s) -> Fraction:
    """Closed form of ``int_0^1 p_n(x) x^s dx``."""
    s = Fraction(s)
    return (-1) ** n * pochhammer(Fraction(1, 2) - s / 2, n) / pochhammer(s + 1, n + 1)


def mellin_q(n: int, s) -> Fraction:
    """Closed form of ``int_0^1 q_n(x) x^s dx``."""
    s = Fraction(s)
    return (-1) ** n * pochhammer(-s / 2, n) / pochhammer(s + 1, n + 1)


def moment_01(p: RationalPolynomial, s: int) -> Fraction:
    """Exact ``int_0^1 p(x) x^s dx`` for integer ``s >= 0``."""
    return sum((c / (k + s + 1) for k, c in enumerate(p.coeffs)), Fraction(0))


def moment_m10(p: RationalPolynomial, s: int) -> Fraction:
    """Exact ``int_{-1}^0 p(x) x^s dx`` for integer ``s >= 0``."""
    return sum((c * (-1) ** (k + s) / (k + s + 1) for k, c in enumerate(p.coeffs)), Fraction(0))


def _apply_dstar(g: RationalPolynomial) -> RationalPolynomial:
    # (1/x) d/dx
    return g.derivative().divide_by_x()


def rodrigues_p(n: int) -> RationalPolynomial:
    """``(-1)^n / (2^n n!) (D*)^n x^{2n} (1-x)^n`` with ``D* = (1/x) d/dx``."""
    g = X ** (2 * n) * RationalPolynomial([1, -1]) ** n
    for _ in range(n):
        g = _apply_dstar(g)
    return g * Fraction((-1) ** n, 2 ** n * factorial(n))


def rodrigues_q(n: int) -> RationalPolynomial:
    """``(-1)^n / (2^n n!) x (D*)^n x^{2n-1} (1-x)^n``.

    The outer ``x`` cancels the final ``1/x``, so the last step is a plain
    derivative and no negative power ever appears.
    """
    if n == 0:
        return RationalPolynomial([1])
    g = X ** (2 * n - 1) * RationalPolynomial([1, -1]) ** n
    for _ in range(n - 1):
        g = _apply_dstar(g)
    g = g.derivative()
    return g * Fraction((-1) ** n, 2 ** n * factorial(n))


def rodrigues_check_p(n: int) -> bool:
    return rodrigues_p(n) == p_poly(n)


def rodrigues_check_q(n: int) -> bool:
    return rodrigues_q(n) == q_poly(n)


def recurrence_check(n: int) -> bool:
    """All recurrence identities linking p, q, r at step ``n`` as exact polynomial identities."""
    if n < 1:
        raise ValueError("recurrence_check needs n >= 1")
    p, q, r = p_poly, q_poly, r_poly
    p_nm2 = p(n - 2) if n >= 2 else RationalPolynomial()
    ok = X * p(n - 1) * (3 * n - 1) == q(n) * (2 * n) + q(n - 1) * (2 * n - 1)
    ok &= X * q(n - 1) * (3 * n - 2) == (p(n) * n + p(n - 1) * (2 * n - 1) + p_nm2 * (n - 1)) * Fraction(2, 3)
    ok &= X * r(n - 1) == (p(n - 1) + p(n)) * Fraction(2, 3)
    ok &= q(n) * (3 * n + 1) == r(n) * (n + 1) + r(n - 1) * n
    # one step of the 3x3 matrix form
    step_p = -p(n - 1) + X * r(n - 1) * Fraction(3, 2)
    step_q = X * p(n - 1) * Fraction(3 * n - 1, 2 * n) - q(n - 1) * Fraction(2 * n - 1, 2 * n)
    step_r = (X * p(n - 1) * Fraction((3 * n + 1) * (3 * n - 1), 2 * n * (n + 1))
              - q(n - 1) * Fraction((3 * n + 1) * (2 * n - 1), 2 * n * (n + 1))
              - r(n - 1) * Fraction(n, n + 1))
    ok &= (step_p, step_q, step_r) == (p(n), q(n), r(n))
    return bool(ok)


# -- type I -----------------------------------------------------------------

@dataclass(frozen=True)
class TypeIPair:
    """Glued function ``A on [-1,0]`` plus ``B on [0,1]`` for multi-index (n, m)."""

    a_part: RationalPolynomial
    b_part: RationalPolynomial
    index: tuple[int, int]

    def moment(self, k: int) -> Fraction:
        return moment_m10(self.a_part, k) + moment_01(self.b_part, k)

    def check(self) -> bool:
        n, m = self.index
        if self.a_part.degree > n - 1 or self.b_part.degree > m - 1:
            return False
        if any(self.moment(k) for k in range(n + m - 1)):
            return False
        return self.moment(n + m - 1) == 1


@lru_cache(maxsize=None)
def type1_diagonal(n: int) -> TypeIPair:
    """Type I pair for the index (n, n), n >= 1."""
    if n < 1:
        raise ValueError("type1_diagonal needs n >= 1")
    m = n - 1
    b = p_poly(m) * Fraction(factorial(3 * m + 2), 2 * factorial(m) * factorial(2 * m + 1))
    return TypeIPair(-b.reflect(), b, (n, n))


def offdiagonal_norm(n: int) -> Fraction:
    """``b_n = 2 (n/2 + 1)_n (2n)! / (3n+1)!``."""
    return 2 * pochhammer(Fraction(n, 2) + 1, n) * Fraction(factorial(2 * n), factorial(3 * n + 1))


@lru_cache(maxsize=None)
def type1_offdiagonal(n: int) -> tuple[TypeIPair, TypeIPair]:
    """Type I pairs for (n+1, n) and (n, n+1), n >= 0."""
    if n < 0:
        raise ValueError("type1_offdiagonal needs n >= 0")
    bn = offdiagonal_norm(n)
    cq = half_binomial(n, Fraction(n, 2))
    cp = half_binomial(n, Fraction(n - 1, 2))
    b_up = (q_poly(n) * cq - p_poly(n) * cp) / bn       # B_{n+1,n}
    b_down = (q_poly(n) * cq + p_poly(n) * cp) / bn     # B_{n,n+1}
    upper = TypeIPair(b_down.reflect(), b_up, (n + 1, n))
    lower = TypeIPair(b_up.reflect(), b_down, (n, n + 1))
    return upper, lower


def type1(n: int, m: int) -> TypeIPair:
    """Near-diagonal type I pair, |n - m| <= 1."""
    if n == m:
        return type1_diagonal(n)
    if n == m + 1:
        return type1_offdiagonal(m)[0]
    if m == n + 1:
        return type1_offdiagonal(n)[1]
    raise ValueError(f"only near-diagonal indices are constructed, got {(n, m)}")


# -- type II ----------------------------------------------------------------

@dataclass(frozen=True)
class TypeIIPolynomial:
    """Monic ``P_{n,m}`` orthogonal to degree < n on [-1,0] and < m on [0,1]."""

    poly: RationalPolynomial
    index: tuple[int, int]

    def check(self) -> bool:
        n, m = self.index
        if self.poly.degree != n + m or self.poly.leading != 1:
            return False
        return not any(moment_m10(self.poly, k) for k in range(n)) and \
            not any(moment_01(self.poly, k) for k in range(m))


@lru_cache(maxsize=None)
def type2_diagonal(n: int) -> TypeIIPolynomial:
    """Explicit even polynomial ``P_{n,n}``."""
    if n < 0:
        raise ValueError("type2_diagonal needs n >= 0")
    c = Fraction(factorial(n) * factorial(2 * n), factorial(3 * n))
    coeffs = [Fraction(0)] * (2 * n + 1)
    for k in range(n + 1):
        coeffs[2 * k] = c * comb(n, k) * comb(n + 2 * k, 2 * k) * (-1) ** (n - k)
    return TypeIIPolynomial(RationalPolynomial(coeffs), (n, n))


def type2_by_moments(n: int, m: int) -> TypeIIPolynomial:
    """Solve the exact moment system for the monic ``P_{n,m}``."""
    N = n + m
    if N == 0:
        return TypeIIPolynomial(RationalPolynomial([1]), (n, m))
    rows, rhs = [], []
    for k in range(n):
        rows.append([Fraction((-1) ** (i + k), i + k + 1) for i in range(N)])
        rhs.append(-Fraction((-1) ** (N + k), N + k + 1))
    for k in range(m):
        rows.append([Fraction(1, i + k + 1) for i in range(N)])
        rhs.append(-Fraction(1, N + k + 1))
    try:
        sol = solve_linear(Matrix(rows), rhs)
    except SingularMatrix as exc:
        raise SingularMomentSystem(f"moment system for {(n, m)} is singular") from exc
    return TypeIIPolynomial(RationalPolynomial(list(sol) + [1]), (n, m))


@lru_cache(maxsize=None)
def type2_offdiagonal(n: int) -> tuple[TypeIIPolynomial, TypeIIPolynomial]:
    """``(P_{n+1,n}, P_{n,n+1})``; the second is ``-P_{n+1,n}(-x)``."""
    if n < 0:
        raise ValueError("type2_offdiagonal needs n >= 0")
    up = type2_by_moments(n + 1, n)
    down = TypeIIPolynomial(-up.poly.reflect(), (n, n + 1))
    return up, down


def type2(n: int, m: int) -> TypeIIPolynomial:
    if n == m:
        return type2_diagonal(n)
    if n == m + 1:
        return type2_offdiagonal(m)[0]
    if m == n + 1:
        return type2_offdiagonal(n)[1]
    return type2_by_moments(n, m)


def _mellin_constant(poly: RationalPolynomial, n: int, shape, s_max: int) -> Optional[Fraction]:
    """Constant K with ``int_0^1 poly x^s = K * shape(s)`` for s = 0..s_max, or None."""
    const = None
    for s in range(s_max + 1):
        lhs = moment_01(poly, s)
        rhs = shape(s)
        if rhs == 0:
            if lhs != 0:
                return None
            continue
        ratio = lhs / rhs
        if const is None:
            const = ratio
        elif ratio != const:
            return None
    return const


def diagonal_mellin_constant(n: int) -> Optional[Fraction]:
    """``C_n`` with ``int_0^1 P_{n,n} x^s = C_n (-s)_n / (1/2 + s/2)_{n+1}``."""
    shape = lambda s: pochhammer(-s, n) / pochhammer(Fraction(1, 2) + Fraction(s, 2), n + 1)
    return _mellin_constant(type2_diagonal(n).poly, n, shape, 3 * n + 3)


def offdiagonal_mellin_constant(n: int) -> Optional[Fraction]:
    """``D_n`` with ``int_0^1 (P_{n+1,n} + P_{n,n+1}) x^s = D_n (-s)_n / (1 + s/2)_{n+1}``."""
    up, down = type2_offdiagonal(n)
    shape = lambda s: pochhammer(-s, n) / pochhammer(1 + Fraction(s, 2), n + 1)
    return _mellin_constant(up.poly + down.poly, n, shape, 3 * n + 3)


def nn_coefficient(j: int) -> Fraction:
    """``a_j`` with ``P_{j,j-1} - P_{j-1,j} = a_j P_{j-1,j-1}``."""
    if j < 1:
        raise ValueError("nn_coefficient needs j >= 1")
    up, down = type2_offdiagonal(j - 1)
    diff = up.poly - down.poly
    target = type2_diagonal(j - 1).poly
    ratio = diff[target.degree] / target.leading
    if diff != target * ratio:
        raise NotProportional(f"P_{{{j},{j - 1}}} - P_{{{j - 1},{j}}} is not a multiple of P_{{{j - 1},{j - 1}}}")
    return ratio


def biorthogonality(p: TypeIIPolynomial, q: TypeIPair) -> Fraction:
    """Exact ``int_{-1}^1 P_{n,m} Q_{k,l}``."""
    return (p.poly * q.a_part).integrate(-1, 0) + (p.poly * q.b_part).integrate(0, 1)


def biorthogonality_expected(n: int, m: int, k: int, l: int) -> Optional[int]:
    """Value predicted by the biorthogonality table, or None when no rule applies."""
    if k <= n and l <= m:
        return 0
    if n + m <= k + l - 2:
        return 0
    if n + m == k + l - 1:
        return 1
    return None


# -- wavelet expansion over type I polynomials -------------------------------

@dataclass(frozen=True)
class WaveletExpansion:
    """``f_k^n = sum c_j Q_{j,j} + sum d_j Q_{j+1,j}``; values are surds sharing the wavelet's scale."""

    n: int
    k: int
    c: dict = field(default_factory=dict)   # j = 1..n
    d: dict = field(default_factory=dict)   # j = 0..n-1
    reconstructs: bool = False
    parity_pattern: bool = False
    truncation_pattern: bool = False


def expand_wavelet_typeI(n: int, k: int) -> WaveletExpansion:
    """Biorthogonal coefficients of ``f_k^n`` and the zero patterns they must obey."""
    from .wavelet import wavelet_piecewise

    if not 1 <= k <= n:
        raise ValueError(f"wavelet index {k} outside 1..{n}")
    scale, left, right = wavelet_piecewise(n, k)

    def pair(P: RationalPolynomial) -> Fraction:
        return (P * left).integrate(-1, 0) + (P * right).integrate(0, 1)

    c = {j: pair(type2(j, j - 1).poly) for j in range(1, n + 1)}
    d = {j: pair(type2(j, j).poly) for j in range(0, n)}

    rec_left, rec_right = RationalPolynomial(), RationalPolynomial()
    for j, cj in c.items():
        Q = type1(j, j)
        rec_left, rec_right = rec_left + Q.a_part * cj, rec_right + Q.b_part * cj
    for j, dj in d.items():
        Q = type1(j + 1, j)
        rec_left, rec_right = rec_left + Q.a_part * dj, rec_right + Q.b_part * dj
    reconstructs = rec_left == left and rec_right == right

    if (k + n) % 2 == 0:
        parity = all(v == 0 for v in d.values())
    else:
        parity = all(2 * c[j] == nn_coefficient(j) * d[j - 1] for j in range(1, n + 1))
    truncation = all(c[j] == 0 for j in c if 2 * j - 1 <= k + n - 2) and \
        all(d[j] == 0 for j in d if 2 * j <= k + n - 2)

    return WaveletExpansion(
        n, k,
        {j: scale * v for j, v in c.items()},
        {j: scale * v for j, v in d.items()},
        reconstructs, parity, truncation,
    )
