from fractions import Fraction as F
import math

import numpy as np
import pytest

from alpert.errors import DomainError
from alpert.ratmath import Matrix, Surd
from alpert.wavelet import (build_wavelet, eval_wavelet, expansion_matrices, gram_schmidt_agreement, gs_matrices,
                            hat_d_factor, normalization_constants, tail_indices, verify_matrix_identities,
                            verify_moments, verify_orthonormal, wavelet_indices, wavelet_moment)


def test_expansion_matrices():
    assert expansion_matrices(1).a_mat == Matrix([[1]])
    e = expansion_matrices(2)
    assert e.a_mat.row(1) == (F(-1, 4), Surd(F(1, 4), 3))
    assert e.b_mat.row(1) == (0, Surd(F(1, 6), 3))


def test_gs_matrices_small():
    g = gs_matrices(1)
    assert g.g_p == Matrix([[Surd(F(1, 2), 2)]])
    assert g.g_q.rows == 0
    assert gs_matrices(2).g_p == Matrix([[Surd(1, 2)]])


@pytest.mark.parametrize("n", range(2, 11))
def test_gs_upper_positive(n):
    g = gs_matrices(n)
    for m in (g.g_p, g.g_q):
        assert m.is_upper_triangular()
        assert all(m[i, i] > 0 for i in range(m.rows))


def test_tail_windows():
    assert tail_indices(4) == ((2, 3), (2, 3))
    assert tail_indices(5) == ((2, 3, 4), (3, 4))
    assert wavelet_indices(5, "p") == [1, 3, 5]
    assert wavelet_indices(5, "q") == [2, 4]


def test_factored_examples():
    diag, core = hat_d_factor(build_wavelet(1))
    assert diag == [Surd(F(1, 2), 2)] and core == Matrix([[1]])
    diag, core = hat_d_factor(build_wavelet(2))
    assert diag == [Surd(F(1, 2), 6), Surd(F(3, 4), 2)]
    assert core == Matrix([[0, 1], [F(-1, 3), 1]])
    diag, core = hat_d_factor(build_wavelet(3))
    assert diag[0] == Surd(F(5, 6), 2)
    assert core.row(0) == (F(-1, 5), F(3, 5), 1)
    diag, core = hat_d_factor(build_wavelet(4))
    assert diag[3] == Surd(F(1, 16), 210)
    assert core.row(3) == (F(-5, 21), F(5, 7), F(-23, 21), 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_d_minus_parity(n):
    w = build_wavelet(n)
    for i in range(n):
        for j in range(n):
            # row index 1-based, Legendre degree 0-based
            assert w.d_minus[i, j] == (-1) ** ((i + 1) + j + n - 1) * w.d_plus[i, j]


def test_hat_d_scaling():
    w = build_wavelet(5)
    for j in range(5):
        for i in range(5):
            assert w.d_plus[i, j] == w.hat_d[i, j] / Surd(1, 2 * j + 1)


def test_normalization_constants():
    c, d = normalization_constants(1)
    assert c[0] == Surd(F(1, 2), 2)
    c, d = normalization_constants(2)
    assert c[0] == Surd(1, 2) and d[0] == Surd(1, 6)


@pytest.mark.parametrize("n", [1, 5, 12])
def test_matrix_identities(n):
    for r in verify_matrix_identities(n):
        assert r.passed and r.max_deviation <= 1e-25, r


@pytest.mark.parametrize("n", range(1, 9))
def test_moments_and_orthonormality_exact(n):
    assert verify_moments(n)
    assert verify_orthonormal(n)


def test_first_nonvanishing_moment():
    # f_k^n kills t^0..t^{k+n-2} but not t^{k+n-1}
    for n in range(1, 5):
        for k in range(1, n + 1):
            assert wavelet_moment(n, k, k + n - 1) != 0


def test_eval_examples():
    assert eval_wavelet(1, 1, 0.5) == pytest.approx(1 / math.sqrt(2))
    assert eval_wavelet(1, 1, -0.5) == pytest.approx(-1 / math.sqrt(2))
    assert eval_wavelet(1, 1, 0.0) == pytest.approx(1 / math.sqrt(2))
    with pytest.raises(DomainError):
        eval_wavelet(2, 1, 1.5)


def test_eval_moments_numeric():
    x, w = np.polynomial.legendre.leggauss(20)
    pts = np.concatenate([(x - 1) / 2, (x + 1) / 2])
    wts = np.concatenate([w / 2, w / 2])
    vals = eval_wavelet(2, 2, pts)
    for i in range(3):
        assert abs(np.sum(wts * vals * pts ** i)) <= 1e-12
    assert np.sum(wts * vals ** 2) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n", range(1, 7))
def test_gram_schmidt_agreement(n):
    assert gram_schmidt_agreement(n) <= 1e-20
