"""Alpert multiwavelets via orthonormal Legendre polynomials and Legendre-Angelesco polynomials.

Exact constructions use rationals and surds (``rational * sqrt(squarefree)``);
floating checks run at 128 bits through mpmath; the multiresolution engine
uses float64 numpy arrays.
"""
from .errors import AlpertError
from .mra import (DecomposedSignal, PiecewiseLegendreSignal, butterfly, decompose, project,
                  reconstruct)
from .ratmath import Matrix, Surd
from .scaling import ScalingPair, build_scaling
from .wavelet import WaveletPair, build_wavelet, eval_wavelet, hat_d_factor

__version__ = "0.1.0"

__all__ = [
    "AlpertError", "DecomposedSignal", "Matrix", "PiecewiseLegendreSignal", "ScalingPair", "Surd",
    "WaveletPair", "build_scaling", "build_wavelet", "butterfly", "decompose", "eval_wavelet",
    "hat_d_factor", "project", "reconstruct",
]
