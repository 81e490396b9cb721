import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alpert.errors import ShapeMismatch
from alpert.legendre import eval_orthonormal
from alpert.mra import (PiecewiseLegendreSignal, analyze_step, butterfly, butterfly_mp, decompose, project,
                        reconstruct, synthesize_step)
from alpert.wavelet import eval_wavelet

import mpmath


def random_signal(rng, n, K):
    return PiecewiseLegendreSignal(n, K, rng.standard_normal((2 ** K, n)))


def test_haar_butterfly():
    r = 1 / math.sqrt(2)
    assert np.allclose(butterfly(1), [[r, r], [-r, r]], atol=1e-16)


@pytest.mark.parametrize("n", [1, 3, 8, 12])
def test_butterfly_orthogonal(n):
    with mpmath.workprec(128):
        T = butterfly_mp(n)
        dev = mpmath.mnorm(T * T.T - mpmath.eye(2 * n), "inf")
        assert dev <= mpmath.mpf("1e-25")
    assert abs(abs(np.linalg.det(butterfly(n))) - 1) < 1e-12


def test_butterfly_read_only():
    with pytest.raises(ValueError):
        butterfly(2)[0, 0] = 1.0


def test_constant_signal_has_no_details():
    blocks = np.zeros((8, 3))
    blocks[:, 0] = 0.7
    d = decompose(PiecewiseLegendreSignal(3, 3, blocks))
    assert d.max_detail() <= 1e-14


def test_level0_decompose():
    s = PiecewiseLegendreSignal(2, 0, [[1.0, 2.0]])
    d = decompose(s)
    assert d.details == [] and np.array_equal(d.coarse.blocks, s.blocks)


def test_analyze_synthesize_roundtrip():
    rng = np.random.default_rng(0)
    s = random_signal(rng, 4, 3)
    c, det = analyze_step(s)
    assert c.level == 2 and det.shape == (4, 4)
    assert c.energy() + np.sum(det ** 2) == pytest.approx(s.energy(), abs=1e-12)
    back = synthesize_step(c, det)
    assert np.max(np.abs(back.blocks - s.blocks)) <= 1e-12
    with pytest.raises(ShapeMismatch):
        synthesize_step(c, det[:2])


def test_details_only_orthogonal_to_coarse_polynomials():
    n = 3
    coarse = PiecewiseLegendreSignal(n, 1, np.zeros((2, n)))
    details = np.random.default_rng(1).standard_normal((2, n))
    fine = synthesize_step(coarse, details)
    # inner product with any level-1 piecewise polynomial of degree < n vanishes
    for b in range(2):
        for j in range(n):
            probe = np.zeros((2, n))
            probe[b, j] = 1.0
            lifted = synthesize_step(PiecewiseLegendreSignal(n, 1, probe), np.zeros((2, n)))
            assert abs(np.sum(lifted.blocks * fine.blocks)) <= 1e-12


def test_unit_coarse_reproduces_scaling_function():
    n = 3
    coarse = PiecewiseLegendreSignal(n, 0, np.eye(n)[[1]])
    fine = synthesize_step(coarse, np.zeros((1, n)))
    xs = np.linspace(0.01, 0.99, 17)
    want = np.array([eval_orthonormal(1, x) for x in xs])
    assert np.allclose(fine.evaluate(xs), want, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 6), st.integers(0, 2 ** 31))
def test_perfect_reconstruction_property(n, K, seed):
    s = random_signal(np.random.default_rng(seed), n, K)
    d = decompose(s)
    assert abs(d.energy() - s.energy()) <= 1e-12 * max(1.0, s.energy())
    assert np.max(np.abs(reconstruct(d).blocks - s.blocks)) <= 1e-12


def test_partial_levels():
    s = random_signal(np.random.default_rng(3), 2, 4)
    d = decompose(s, 2)
    assert d.coarse.level == 2 and len(d.details) == 2
    assert np.allclose(reconstruct(d).blocks, s.blocks, atol=1e-12)
    with pytest.raises(ShapeMismatch):
        decompose(s, 5)


def test_polynomial_sparsity():
    for n in range(1, 7):
        poly = lambda x, n=n: sum((k + 1) * x ** k for k in range(n))
        assert decompose(project(poly, n, 4)).max_detail() <= 1e-12
        high = lambda x, n=n: x ** n
        assert decompose(project(high, n, 4)).max_detail() > 1e-6


def test_square_thresholds():
    sq = lambda x: x ** 2
    assert decompose(project(sq, 3, 5)).max_detail() <= 1e-12
    assert decompose(project(sq, 2, 5)).max_detail() > 1e-4


def test_project_examples():
    s = project(lambda x: np.ones_like(x), 2, 1)
    assert np.allclose(s.blocks, [[2 ** -0.5, 0], [2 ** -0.5, 0]], atol=1e-15)
    assert s.energy() == pytest.approx(1.0)
    s = project(lambda x: math.sqrt(3) * (2 * x - 1), 2, 0)
    assert np.allclose(s.blocks, [[0, 1]], atol=1e-14)
    a = project(lambda x: x ** 3, 3, 2, quad_nodes=8)
    b = project(lambda x: x ** 3, 3, 2, quad_nodes=64)
    assert np.max(np.abs(a.blocks - b.blocks)) <= 1e-14


@pytest.mark.parametrize("n", [1, 2, 4])
def test_basis_consistency(n):
    for k in range(1, n + 1):
        s = project(lambda x: math.sqrt(2) * eval_wavelet(n, k, 2 * x - 1), n, 1, quad_nodes=n + 12)
        d = decompose(s)
        assert np.max(np.abs(d.coarse.blocks)) <= 1e-10
        want = np.zeros(n)
        want[k - 1] = 1.0
        assert np.max(np.abs(d.details[0][0] - want)) <= 1e-10
