"""Fourier transforms of the multiwavelets.

The last two wavelets of each multiplicity have closed forms in terms of a
1F2 series; every wavelet can be transformed by composite Gauss-Legendre
quadrature on (0, 1) using its parity.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .gram import HypergeometricSpec, eval_1f2
from .legendre import gauss_legendre
from .ratmath import DEFAULT_PRECISION, to_mp
from .wavelet import eval_wavelet, normalization_constants, parity_sign

# beyond this |t| the alternating 1F2 series loses too many digits to cancellation
SERIES_CUTOFF = 60.0
SERIES_TOL = 1e-20
PANELS_PER_OSCILLATION = 8


@dataclass(frozen=True)
class FourierValue:
    t: float
    value: complex
    method: str = "series"


def fourier_last(n: int, t: float, prec: int = DEFAULT_PRECISION) -> FourierValue:
    """``int_{-1}^1 f_{n+1}^{n+1}(x) e^{ixt} dx`` (purely imaginary)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if abs(t) > SERIES_CUTOFF:
        return FourierValue(t, fourier_quadrature(n + 1, n + 1, t), "quadrature")
    return FourierValue(t, complex(0.0, float(fourier_mp(n, t, odd=True, prec=prec))))


def fourier_second_last(n: int, t: float, prec: int = DEFAULT_PRECISION) -> FourierValue:
    """``int_{-1}^1 f_n^{n+1}(x) e^{ixt} dx`` (purely real)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if abs(t) > SERIES_CUTOFF:
        return FourierValue(t, fourier_quadrature(n + 1, n, t), "quadrature")
    return FourierValue(t, complex(float(fourier_mp(n, t, odd=False, prec=prec)), 0.0))


def fourier_mp(n: int, t, odd: bool, prec: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Series value at full precision: the imaginary part (``odd``) or real part."""
    with mpmath.workprec(prec):
        t = mpmath.mpf(t)
        if odd:
            c = to_mp(normalization_constants(n + 1)[0][0])
            pref = 2 * c * t ** (2 * n + 1) * (-1) ** n * mpmath.factorial(n) / mpmath.factorial(3 * n + 2)
            spec = HypergeometricSpec((Fraction(n + 1),), (Fraction(3 * n + 3, 2), Fraction(3 * n + 4, 2)), -t * t / 4)
        else:
            d = to_mp(normalization_constants(n + 1)[1][0])
            pref = 2 * d * t ** (2 * n) * (-1) ** n * mpmath.factorial(n) / mpmath.factorial(3 * n + 1)
            spec = HypergeometricSpec((Fraction(n + 1),), (Fraction(3 * n + 2, 2), Fraction(3 * n + 3, 2)), -t * t / 4)
        return pref * eval_1f2(spec, abs_tol=SERIES_TOL)


def fourier_quadrature(n: int, k: int, t: float, nodes: int | None = None) -> complex:
    """Composite Gauss-Legendre transform of ``f_k^n`` with >= 8 panels per oscillation."""
    t = float(t)
    panels = max(4, math.ceil(PANELS_PER_OSCILLATION * abs(t) / (2 * math.pi)))
    x, w = gauss_legendre(nodes or n + 8)
    edges = np.linspace(0.0, 1.0, panels + 1)
    h = np.diff(edges)
    pts = (edges[:-1, None] + h[:, None] * x[None, :]).ravel()
    wts = (h[:, None] * w[None, :]).ravel()
    f = eval_wavelet(n, k, pts)
    if parity_sign(n, k) < 0:
        return complex(0.0, 2.0 * float(np.sum(wts * f * np.sin(pts * t))))
    return complex(2.0 * float(np.sum(wts * f * np.cos(pts * t))), 0.0)


def fourier(n: int, k: int, t: float) -> FourierValue:
    """Transform of ``f_k^n``: closed form for the last two wavelets, quadrature otherwise."""
    if not 1 <= k <= n:
        raise ValueError(f"wavelet index {k} outside 1..{n}")
    if k == n:
        return fourier_last(n - 1, t)
    if k == n - 1:
        return fourier_second_last(n - 1, t)
    return FourierValue(t, fourier_quadrature(n, k, t), "quadrature")


def sample_csv(n: int, k: int, ts) -> str:
    """``t,re,im`` rows for a grid of frequencies."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "re", "im"])
    for t in ts:
        v = fourier(n, k, float(t)).value
        w.writerow([repr(float(t)), repr(v.real), repr(v.imag)])
    return buf.getvalue()


def loglog_slope(values_at, ts) -> float:
    """Least-squares slope of ``log|v|`` against ``log t``."""
    ts = np.asarray(ts, dtype=float)
    ys = np.array([abs(values_at(t)) for t in ts], dtype=float)
    slope, _ = np.polyfit(np.log(ts), np.log(ys), 1)
    return float(slope)
