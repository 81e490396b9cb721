"""Multiresolution analysis on dyadic partitions of [0, 1].

A level-``K`` signal stores, for each of the ``2**K`` subintervals, the
coefficients against ``2**(K/2) * ell_j(2**K x - b)``.  One analysis step maps
a (left, right) pair of child blocks to a parent block plus a detail block
through the orthogonal butterfly matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
import numpy as np

from .errors import ShapeMismatch
from .legendre import eval_orthonormal_all, gauss_legendre
from .ratmath import DEFAULT_PRECISION, Surd, to_mp
from .scaling import build_scaling
from .wavelet import build_wavelet


def butterfly_mp(n: int, prec: int = DEFAULT_PRECISION) -> mpmath.matrix:
    """``[[C_-1/sqrt2, C_1/sqrt2], [D_-1, D_1]]`` at ``prec`` bits."""
    sc, wv = build_scaling(n), build_wavelet(n)
    half = Surd(1, 2) / 2      # 1/sqrt(2)
    T = mpmath.matrix(2 * n, 2 * n)
    with mpmath.workprec(prec):
        for i in range(n):
            for j in range(n):
                T[i, j] = to_mp(sc.c_minus[i, j] * half)
                T[i, n + j] = to_mp(sc.c_plus[i, j] * half)
                T[n + i, j] = to_mp(wv.d_minus[i, j])
                T[n + i, n + j] = to_mp(wv.d_plus[i, j])
    return T


@lru_cache(maxsize=None)
def _butterfly(n: int) -> np.ndarray:
    with mpmath.workprec(DEFAULT_PRECISION):
        T = butterfly_mp(n)
        out = np.array([[float(T[i, j]) for j in range(T.cols)] for i in range(T.rows)])
    out.setflags(write=False)
    return out


def butterfly(n: int) -> np.ndarray:
    """Orthogonal ``2n x 2n`` float64 matrix; rows: scaling then wavelet, columns: left then right child."""
    if n < 1:
        raise ValueError("multiplicity must be >= 1")
    return _butterfly(n)


@dataclass
class PiecewiseLegendreSignal:
    n: int
    level: int
    blocks: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.blocks = np.asarray(self.blocks, dtype=float)
        if self.n < 1 or self.level < 0:
            raise ValueError("need n >= 1 and level >= 0")
        if self.blocks.shape != (2 ** self.level, self.n):
            raise ShapeMismatch(f"expected blocks of shape {(2 ** self.level, self.n)}, got {self.blocks.shape}")

    def energy(self) -> float:
        return float(np.sum(self.blocks ** 2))

    def evaluate(self, x) -> np.ndarray:
        """Pointwise value on [0, 1) (x = 1 belongs to the last block)."""
        x = np.asarray(x, dtype=float)
        m = 2 ** self.level
        b = np.clip(np.floor(x * m).astype(int), 0, m - 1)
        u = x * m - b
        basis = eval_orthonormal_all(self.n, u)            # (n, ...)
        coeffs = np.moveaxis(self.blocks[b], -1, 0)        # (n, ...)
        return np.sum(coeffs * basis, axis=0) * 2 ** (self.level / 2)


@dataclass
class DecomposedSignal:
    n: int
    coarse: PiecewiseLegendreSignal
    details: list = field(default_factory=list)   # details[j]: array (2**j, n)

    @property
    def level(self) -> int:
        return len(self.details)

    def energy(self) -> float:
        return self.coarse.energy() + sum(float(np.sum(d ** 2)) for d in self.details)

    def max_detail(self) -> float:
        return max((float(np.max(np.abs(d))) for d in self.details), default=0.0)


def analyze_step(s: PiecewiseLegendreSignal) -> tuple[PiecewiseLegendreSignal, np.ndarray]:
    if s.level < 1:
        raise ValueError("cannot analyze a level-0 signal")
    n = s.n
    pairs = s.blocks.reshape(2 ** (s.level - 1), 2 * n)        # (left | right) per parent
    out = pairs @ butterfly(n).T
    return PiecewiseLegendreSignal(n, s.level - 1, out[:, :n]), out[:, n:].copy()


def synthesize_step(coarse: PiecewiseLegendreSignal, details) -> PiecewiseLegendreSignal:
    details = np.asarray(details, dtype=float)
    n = coarse.n
    if details.shape != coarse.blocks.shape:
        raise ShapeMismatch(f"details shape {details.shape} does not match coarse {coarse.blocks.shape}")
    stacked = np.concatenate([coarse.blocks, details], axis=1)
    children = stacked @ butterfly(n)
    return PiecewiseLegendreSignal(n, coarse.level + 1, children.reshape(2 ** (coarse.level + 1), n))


def decompose(s: PiecewiseLegendreSignal, levels: int | None = None) -> DecomposedSignal:
    """Cascade down ``levels`` steps (default: all the way to level 0).

    ``details[j]`` holds the detail blocks produced at coarse level
    ``s.level - levels + j``.
    """
    levels = s.level if levels is None else levels
    if not 0 <= levels <= s.level:
        raise ShapeMismatch(f"cannot take {levels} steps from level {s.level}")
    details = []
    cur = s
    for _ in range(levels):
        cur, d = analyze_step(cur)
        details.append(d)
    return DecomposedSignal(s.n, cur, details[::-1])


def reconstruct(d: DecomposedSignal) -> PiecewiseLegendreSignal:
    cur = d.coarse
    for det in d.details:
        det = np.asarray(det, dtype=float)
        if det.shape != (2 ** cur.level, d.n):
            raise ShapeMismatch(f"detail block of shape {det.shape} at level {cur.level}")
        cur = synthesize_step(cur, det)
    return cur


def project(f, n: int, K: int, quad_nodes: int | None = None) -> PiecewiseLegendreSignal:
    """Orthogonal projection of ``f`` (vectorized callable on [0, 1]) onto level-``K`` piecewise polynomials."""
    quad_nodes = n + 8 if quad_nodes is None else quad_nodes
    if quad_nodes < n:
        raise ValueError("quad_nodes must be >= n")
    x, w = gauss_legendre(quad_nodes)
    m = 2 ** K
    pts = (np.arange(m)[:, None] + x[None, :]) / m             # (m, q)
    vals = np.asarray(f(pts), dtype=float) * np.ones_like(pts)
    basis = eval_orthonormal_all(n, x)                         # (n, q)
    blocks = (vals * w[None, :]) @ basis.T * 2 ** (-K / 2)
    return PiecewiseLegendreSignal(n, K, blocks)
