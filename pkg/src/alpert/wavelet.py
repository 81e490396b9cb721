"""Alpert multiwavelets expressed in orthonormal Legendre polynomials.

On (0, 1) every wavelet ``f_k^n`` is a combination of the tail of one of the
two families ``p_i`` / ``q_i``:

* ``k + n`` even: ``p_i`` for ``i`` in the upper half of ``0..n-1``; odd function on [-1, 1];
* ``k + n`` odd:  ``q_i`` likewise; even function on [-1, 1].

The combination coefficients come from a UL (reverse order) Cholesky
factorization of twice the tail Gram matrix.  Rows of that factor are a single
surd times a rational vector, so every wavelet is carried exactly as
``scale * right`` with ``scale`` a surd and ``right`` a rational polynomial.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .angelesco import p_poly, q_poly
from .errors import DomainError, NonFactorableRow
from .gram import gram_matrix
from .legendre import (eval_orthonormal_all, legendre_expand, legendre_expand_rational,
                       orthonormal_scale, shifted_legendre)
from .polynomial import RationalPolynomial
from .ratmath import (DEFAULT_PRECISION, Matrix, Surd, cholesky, determinant, mp_inf_norm,
                      solve_linear, to_mp, ul_ldlt)
from .scaling import CheckResult, build_scaling

FAMILIES = {"p": p_poly, "q": q_poly}


@dataclass(frozen=True)
class ExpansionMatrices:
    """Rows: ``p_k`` (``a_mat``) and ``q_k`` (``b_mat``) in the basis ``ell_0..ell_{n-1}``."""

    a_mat: Matrix
    b_mat: Matrix


@dataclass(frozen=True)
class GsMatrices:
    """Upper triangular factors mapping the tail families onto wavelets of one parity."""

    g_p: Matrix
    g_q: Matrix
    p_indices: tuple
    q_indices: tuple


@dataclass(frozen=True)
class WaveletPair:
    n: int
    d_minus: Matrix
    d_plus: Matrix
    hat_d: Matrix


def family_of(n: int, k: int) -> str:
    """Which family builds ``f_k^n`` on (0, 1)."""
    return "p" if (k + n) % 2 == 0 else "q"


def tail_indices(n: int) -> tuple[tuple, tuple]:
    """Index windows of the p and q families used for multiplicity ``n``."""
    if n < 1:
        raise ValueError("multiplicity must be >= 1")
    if n % 2 == 0:
        return tuple(range(n // 2, n)), tuple(range(n // 2, n))
    return tuple(range((n - 1) // 2, n)), tuple(range((n + 1) // 2, n))


def wavelet_indices(n: int, family: str) -> list[int]:
    """Wavelet indices ``k`` (ascending) served by ``family``; the last is ``n`` or ``n-1``."""
    top = n if family == "p" else n - 1
    return list(range(top, 0, -2))[::-1]


def expansion_matrices(n: int) -> ExpansionMatrices:
    """Cholesky factors of the p and q Gram matrices; rows double as Legendre expansions."""
    if n < 1:
        raise ValueError("multiplicity must be >= 1")
    idx = list(range(n))
    a_mat = cholesky(gram_matrix("p", idx))
    b_mat = cholesky(gram_matrix("q", idx))
    for k in range(n):
        if list(a_mat.row(k)) != legendre_expand(p_poly(k), n)[:n]:
            raise ArithmeticError(f"Cholesky row {k} of the p Gram matrix is not the expansion of p_{k}")
        if list(b_mat.row(k)) != legendre_expand(q_poly(k), n)[:n]:
            raise ArithmeticError(f"Cholesky row {k} of the q Gram matrix is not the expansion of q_{k}")
    return ExpansionMatrices(a_mat, b_mat)


def _ul_factor(family: str, indices) -> tuple[list[Surd], Matrix]:
    """``G = diag(scales) @ W`` with ``G (2 Gram) G^T = I``; W unit upper triangular."""
    m = len(indices)
    if m == 0:
        return [], Matrix([])
    two_gram = gram_matrix(family, indices) * 2
    U, D = ul_ldlt(two_gram)
    W = solve_linear(U, Matrix.identity(m))
    scales = [Surd.sqrt(1 / D[i, i]) for i in range(m)]
    return scales, W


def gs_matrices(n: int) -> GsMatrices:
    p_idx, q_idx = tail_indices(n)
    mats = []
    for fam, idx in (("p", p_idx), ("q", q_idx)):
        scales, W = _ul_factor(fam, idx)
        mats.append(Matrix([[scales[i] * W[i, j] for j in range(W.cols)] for i in range(W.rows)]))
    return GsMatrices(mats[0], mats[1], p_idx, q_idx)


# per-n cache: {k: (scale, right polynomial on [0,1])}
_cache: dict[int, dict[int, tuple[Surd, RationalPolynomial]]] = {}
_lock = threading.Lock()


def _build_pieces(n: int) -> dict[int, tuple[Surd, RationalPolynomial]]:
    p_idx, q_idx = tail_indices(n)
    out = {}
    for fam, idx in (("p", p_idx), ("q", q_idx)):
        scales, W = _ul_factor(fam, idx)
        poly = FAMILIES[fam]
        for r, k in enumerate(wavelet_indices(n, fam)):
            right = RationalPolynomial()
            for c, i in enumerate(idx):
                if W[r, c]:
                    right = right + poly(i) * W[r, c]
            # sign convention: positive leading coefficient on (0, 1)
            if right.leading < 0:
                right = -right
            out[k] = (scales[r], right)
    return out


def wavelet_right(n: int, k: int) -> tuple[Surd, RationalPolynomial]:
    """``f_k^n = scale * right`` on (0, 1)."""
    if n < 1:
        raise ValueError("multiplicity must be >= 1")
    if not 1 <= k <= n:
        raise ValueError(f"wavelet index {k} outside 1..{n}")
    with _lock:
        if n not in _cache:
            _cache[n] = _build_pieces(n)
        return _cache[n][k]


def parity_sign(n: int, k: int) -> int:
    """``f_k(-t) = parity_sign * f_k(t)``."""
    return -1 if (k + n) % 2 == 0 else 1


def wavelet_piecewise(n: int, k: int) -> tuple[Surd, RationalPolynomial, RationalPolynomial]:
    """``(scale, left, right)``: ``f_k^n = scale*left`` on [-1,0] and ``scale*right`` on [0,1]."""
    scale, right = wavelet_right(n, k)
    left = right.reflect() * parity_sign(n, k)
    return scale, left, right


def hat_d_rows(n: int) -> tuple[list[Surd], list[list[Fraction]]]:
    """Factored ``D_1`` rows: ``f_k = diag_k * sum_j core_kj P_j(2x-1)`` with ``core_{k,n-1} = 1``."""
    diag, core = [], []
    for k in range(1, n + 1):
        scale, right = wavelet_right(n, k)
        b = legendre_expand_rational(right, n)
        if not b[-1]:
            raise NonFactorableRow(f"row {k}: vanishing last Legendre coefficient")
        diag.append(scale * b[-1])
        core.append([x / b[-1] for x in b])
    return diag, core


def build_wavelet(n: int) -> WaveletPair:
    """``D_{-1}``, ``D_1`` and the unnormalized-Legendre form ``hat D_1``."""
    diag, core = hat_d_rows(n)
    hat_d = Matrix([[diag[k] * core[k][j] for j in range(n)] for k in range(n)])
    inv_scales = [orthonormal_scale(j).inverse() for j in range(n)]
    d_plus = Matrix([[hat_d[k, j] * inv_scales[j] for j in range(n)] for k in range(n)])
    # rows are wavelet indices 1..n, columns Legendre degrees 0..n-1
    d_minus = Matrix([[d_plus[k, j] if (k + 1 + j + n - 1) % 2 == 0 else -d_plus[k, j]
                       for j in range(n)] for k in range(n)])
    return WaveletPair(n, d_minus, d_plus, hat_d)


def hat_d_factor(pair: WaveletPair) -> tuple[list[Surd], Matrix]:
    """Split each row of ``D_1 diag(1, sqrt 3, ...)`` into a surd times a rational row ending in 1."""
    n = pair.n
    diag, core = [], []
    for k in range(n):
        row = [pair.d_plus[k, j] * orthonormal_scale(j) for j in range(n)]
        last = row[-1]
        if not last:
            raise NonFactorableRow(f"row {k + 1}: last entry is zero")
        ratios = []
        for x in row:
            r = x / last
            if isinstance(r, Surd):
                if not r.is_rational:
                    raise NonFactorableRow(f"row {k + 1}: entries do not share one radicand")
                r = r.coeff
            ratios.append(Fraction(r))
        diag.append(last if isinstance(last, Surd) else Surd(last))
        core.append(ratios)
    return diag, Matrix(core)


def normalization_constants(n: int) -> tuple[list[Surd], list[Surd]]:
    """``c_{n,k}`` and ``d_{n,k}`` from Gram determinants (``k = 0`` normalizes the last wavelet)."""
    if n < 1:
        raise ValueError("multiplicity must be >= 1")
    top = n - 1
    out = []
    for fam in ("p", "q"):
        count = len(wavelet_indices(n, fam))
        deltas = [Fraction(1)] + [gram_delta(fam, top, k) for k in range(count)]
        out.append([Surd.sqrt(1 / (2 * deltas[k + 1] * deltas[k])) for k in range(count)])
    return out[0], out[1]


def gram_delta(family: str, top: int, k: int) -> Fraction:
    """Determinant of ``(<f_i, f_j>)`` for ``i, j`` in ``top, top-1, .., top-k``."""
    if k < 0:
        return Fraction(1)
    return determinant(gram_matrix(family, list(range(top, top - k - 1, -1))))


def gram_schmidt_wavelet(n: int, k: int) -> tuple[Surd, RationalPolynomial]:
    """``f_k^n`` on (0, 1) from the bordered-determinant formula (independent of the Cholesky path).

    The cofactor expansion along the polynomial row makes the coefficient of
    the lowest-degree family member positive; the result is therefore equal
    to the production wavelet up to sign.
    """
    fam = family_of(n, k)
    top = n - 1
    j = wavelet_indices(n, fam)[::-1].index(k)      # k = n - 2j or n - 1 - 2j
    cols = list(range(top, top - j - 1, -1))
    G = gram_matrix(fam, cols)
    poly = FAMILIES[fam]
    right = RationalPolynomial()
    for c, i in enumerate(cols):
        minor = Matrix([[G[r, cc] for cc in range(len(cols)) if cc != c] for r in range(j)])
        cof = (-1) ** (j + c) * determinant(minor)
        right = right + poly(i) * cof
    c_norm = normalization_constants(n)[0 if fam == "p" else 1][j]
    return c_norm, right


def eval_wavelet(n: int, k: int, t) -> float | np.ndarray:
    """Floating value of ``f_k^n(t)`` on [-1, 1]; at ``t = 0`` the right limit is used."""
    scale, right = wavelet_right(n, k)
    arr = np.asarray(t, dtype=float)
    if np.any((arr < -1.0) | (arr > 1.0)) or np.any(np.isnan(arr)):
        raise DomainError("wavelet argument outside [-1, 1]")
    D = np.array([float(scale * x) for x in legendre_expand_rational(right, n)])
    ax = np.abs(arr)
    vals = np.einsum("j,j...->...", D, _legendre_unnormalized(n, ax))
    sign = np.where(arr < 0, parity_sign(n, k), 1)
    out = vals * sign
    return float(out) if np.ndim(out) == 0 else out


def _legendre_unnormalized(n: int, x: np.ndarray) -> np.ndarray:
    scale = np.sqrt(2.0 * np.arange(n) + 1.0).reshape((n,) + (1,) * np.ndim(x))
    return eval_orthonormal_all(n, x) / scale


def piecewise_inner(a: tuple, b: tuple) -> Fraction:
    """Exact ``int_{-1}^1`` of the product of two ``(left, right)`` rational pieces."""
    return (a[0] * b[0]).integrate(-1, 0) + (a[1] * b[1]).integrate(0, 1)


def wavelet_moment(n: int, k: int, i: int) -> Surd:
    """Exact ``int_{-1}^1 f_k^n(t) t^i dt``."""
    scale, left, right = wavelet_piecewise(n, k)
    mono = RationalPolynomial.monomial(i)
    return scale * piecewise_inner((left, right), (mono, mono))


def verify_moments(n: int) -> bool:
    return all(not wavelet_moment(n, k, i) for k in range(1, n + 1) for i in range(k + n - 1))


def verify_orthonormal(n: int) -> bool:
    """Exact piecewise ``int f_i f_j = delta_ij``."""
    pieces = {k: wavelet_piecewise(n, k) for k in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            si, li, ri = pieces[i]
            sj, lj, rj = pieces[j]
            val = si * sj * piecewise_inner((li, ri), (lj, rj))
            if val != (1 if i == j else 0):
                return False
    return True


def verify_matrix_identities(n: int, prec: int = DEFAULT_PRECISION, tol: str = "1e-25") -> list[CheckResult]:
    """``D D^T`` sum is ``I`` and ``D C^T`` sum vanishes, at ``prec`` bits."""
    pair = build_wavelet(n)
    sc = build_scaling(n)
    with mpmath.workprec(prec):
        dm, dp = pair.d_minus.to_mp(), pair.d_plus.to_mp()
        cm, cp = sc.c_minus.to_mp(), sc.c_plus.to_mp()
        e1 = mp_inf_norm(dm * dm.T + dp * dp.T - mpmath.eye(n))
        e2 = mp_inf_norm(dm * cm.T + dp * cp.T)
        t = mpmath.mpf(tol)
        return [
            CheckResult(f"n={n} D D^T sum = I", e1 <= t, float(e1), exact=False),
            CheckResult(f"n={n} D C^T sum = 0", e2 <= t, float(e2), exact=False),
        ]


def gram_schmidt_agreement(n: int, prec: int = DEFAULT_PRECISION) -> float:
    """Max coefficientwise gap (orthonormal Legendre basis) between the determinant and Cholesky routes."""
    worst = mpmath.mpf(0)
    with mpmath.workprec(prec):
        for k in range(1, n + 1):
            s1, r1 = wavelet_right(n, k)
            s2, r2 = gram_schmidt_wavelet(n, k)
            a = [to_mp(s1) * to_mp(x) for x in legendre_expand_rational(r1, n)]
            b = [to_mp(s2) * to_mp(x) for x in legendre_expand_rational(r2, n)]
            sign = 1 if a[-1] * b[-1] >= 0 else -1
            for j, (x, y) in enumerate(zip(a, b)):
                worst = max(worst, abs(x - sign * y) / mpmath.sqrt(2 * j + 1))
    return float(worst)


def d_plus_from_legendre_check(n: int) -> bool:
    """``D_1 Phi`` reproduces ``scale * right`` coefficientwise (exact)."""
    pair = build_wavelet(n)
    for k in range(1, n + 1):
        scale, right = wavelet_right(n, k)
        total = RationalPolynomial()
        for j in range(n):
            c = pair.d_plus[k - 1, j] * orthonormal_scale(j) / scale
            if isinstance(c, Surd):
                if not c.is_rational:
                    return False
                c = c.coeff
            total = total + shifted_legendre(j) * c
        if total != right:
            return False
    return True
