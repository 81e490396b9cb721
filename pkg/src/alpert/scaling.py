"""Two-scale (refinement) matrices of the piecewise-Legendre scaling vector.

``Phi(t/2) = C_minus Phi(t) + C_plus Phi(t - 1)``.  ``C_minus`` is built one
row at a time from the commutator with the Jacobi matrix; every entry is a
rational times ``sqrt((2i-1)(2j-1))`` so the recursion never leaves exact
surd arithmetic.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .legendre import eval_orthonormal_all, jacobi_matrix, orthonormal, recurrence_coefficient
from .polynomial import RationalPolynomial
from .ratmath import (DEFAULT_PRECISION, IncompatibleRadicands, Matrix, Surd, _dot, mp_inf_norm,
                      solve_linear, to_mp)


@dataclass(frozen=True)
class ScalingPair:
    n: int
    c_minus: Matrix
    c_plus: Matrix


@dataclass
class CheckResult:
    """Outcome of one verification; ``max_deviation`` is 0 for exact checks that pass."""

    name: str
    passed: bool
    max_deviation: float = 0.0
    exact: bool = True
    detail: str = ""


_lock = threading.Lock()
_rows: list[tuple] = [(Fraction(1),)]


def _extend(n: int) -> None:
    with _lock:
        while len(_rows) < n:
            m = len(_rows)
            C = Matrix([list(r) + [Fraction(0)] * (m - len(r)) for r in _rows])
            J = jacobi_matrix(m)
            last_CJ = [_dot(C.row(m - 1), J.col(j)) for j in range(m)]
            last_JC = [_dot(J.row(m - 1), C.col(j)) for j in range(m)]
            two_a = 2 * recurrence_coefficient(m)
            r = [(x - 2 * y) / two_a for x, y in zip(last_CJ, last_JC)]
            _rows.append(tuple(r) + (Fraction(1, 2 ** m),))


def build_c_minus(n: int) -> Matrix:
    if n < 1:
        raise ValueError("multiplicity must be >= 1")
    _extend(n)
    return Matrix([list(_rows[i]) + [Fraction(0)] * (n - 1 - i) for i in range(n)])


def c_plus_from_c_minus(c_minus: Matrix) -> Matrix:
    """Entrywise ``(-1)^(i+j)`` sign flip."""
    if c_minus.rows != c_minus.cols:
        raise ValueError("square matrix required")
    n = c_minus.rows
    return Matrix([[c_minus[i, j] if (i + j) % 2 == 0 else -c_minus[i, j] for j in range(n)]
                   for i in range(n)])


def build_scaling(n: int) -> ScalingPair:
    c_minus = build_c_minus(n)
    return ScalingPair(n, c_minus, c_plus_from_c_minus(c_minus))


def _exact_or_none(f):
    try:
        return f()
    except IncompatibleRadicands:
        return None


def verify_quadrature_identity(pair: ScalingPair, prec: int = DEFAULT_PRECISION) -> list[CheckResult]:
    """``C_minus C_minus^T + C_plus C_plus^T = 2 I`` and same-parity row orthonormality."""
    n = pair.n
    with mpmath.workprec(prec):
        cm, cp = pair.c_minus.to_mp(), pair.c_plus.to_mp()
        dev = mp_inf_norm(cm * cm.T + cp * cp.T - 2 * mpmath.eye(n))
    results = [CheckResult("C C^T sum = 2I (float)", dev <= mpmath.mpf("1e-25"), float(dev), exact=False)]

    def same_parity():
        ok = True
        C = pair.c_minus
        for i in range(n):
            for j in range(i, n):
                if (i - j) % 2:
                    continue
                ok &= _dot(C.row(i), C.row(j)) == (1 if i == j else 0)
        return ok

    exact = _exact_or_none(same_parity)
    if exact is None:
        with mpmath.workprec(prec):
            g = cm * cm.T
            worst = max((abs(g[i, j] - (1 if i == j else 0)) for i in range(n) for j in range(n)
                         if (i - j) % 2 == 0), default=mpmath.mpf(0))
        results.append(CheckResult("same-parity rows orthonormal", worst <= mpmath.mpf("1e-25"),
                                   float(worst), exact=False))
    else:
        results.append(CheckResult("same-parity rows orthonormal", bool(exact)))
    return results


def commutator_vector(n: int) -> list[Surd]:
    """``m_n`` with ``(m_n)_j = 2 a_n int_0^1 (ell_n(t/2) - ell_n(t)) / t * ell_j(t) dt``."""
    scale_n, P_n = orthonormal(n)
    diff = (P_n.compose_affine(Fraction(1, 2), 0) - P_n).divide_by_x()
    pre = 2 * recurrence_coefficient(n) * scale_n
    out = []
    for j in range(n):
        scale_j, P_j = orthonormal(j)
        integral = sum((a * b / (i + k + 1) for i, a in enumerate(diff.coeffs)
                        for k, b in enumerate(P_j.coeffs)), Fraction(0))
        out.append(pre * scale_j * integral)
    return out


def verify_commutator_structure(pair: ScalingPair, prec: int = DEFAULT_PRECISION) -> list[CheckResult]:
    """``C J - 2 J C`` vanishes off the last row and its last row equals ``m_n^T J``."""
    n = pair.n
    C, J = pair.c_minus, jacobi_matrix(n)
    K = C @ J - (J @ C) * 2
    upper_zero = all(not K[i, j] for i in range(n - 1) for j in range(n))
    m = commutator_vector(n)
    mJ = Matrix([m]) @ J
    last_ok = all(K[n - 1, j] == mJ[0, j] for j in range(n))
    with mpmath.workprec(prec):
        dev = max(abs(to_mp(K[n - 1, j]) - to_mp(mJ[0, j])) for j in range(n))
    return [
        CheckResult("commutator zero off last row", upper_zero),
        CheckResult("commutator last row = m^T J", last_ok, float(dev)),
    ]


def verify_fixed_vector(pair: ScalingPair) -> bool:
    """``J C J^{-1} e_n = e_n`` by two exact solves."""
    n = pair.n
    J = jacobi_matrix(n)
    e = [Fraction(int(i == n - 1)) for i in range(n)]
    x = solve_linear(J, e)
    y = J @ (pair.c_minus @ Matrix([[v] for v in x]))
    return all(y[i, 0] == e[i] for i in range(n))


def refinement_residual(n: int, xs) -> float:
    """Max ``|Phi(x/2) - C_minus Phi(x)|`` over sample points ``xs`` in [0, 1)."""
    C = np.array(build_c_minus(n).to_float())
    xs = np.asarray(xs, dtype=float)
    lhs = eval_orthonormal_all(n, xs / 2)
    rhs = C @ eval_orthonormal_all(n, xs)
    return float(np.max(np.abs(lhs - rhs)))


def refinement_identity_exact(n: int) -> bool:
    """``ell_i(t/2) = sum_j (C_minus)_{ij} ell_j(t)`` as exact polynomial identities."""
    C = build_c_minus(n)
    for i in range(n):
        si, Pi = orthonormal(i)
        lhs = Pi.compose_affine(Fraction(1, 2), 0)
        rhs = RationalPolynomial()
        for j in range(i + 1):
            sj, Pj = orthonormal(j)
            coeff = C[i, j] * sj / si      # must be rational
            if isinstance(coeff, Surd):
                if not coeff.is_rational:
                    return False
                coeff = coeff.coeff
            rhs = rhs + Pj * coeff
        if lhs != rhs:
            return False
    return True
