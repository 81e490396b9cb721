from fractions import Fraction as F

import numpy as np
import pytest

from alpert.ratmath import Matrix, Surd
from alpert.scaling import (build_c_minus, build_scaling, c_plus_from_c_minus, commutator_vector,
                            refinement_identity_exact, refinement_residual, verify_commutator_structure,
                            verify_fixed_vector, verify_quadrature_identity)


def test_small_matrices():
    assert build_scaling(1).c_minus == Matrix([[1]])
    C = build_scaling(2).c_minus
    assert C.row(1) == (Surd(F(-1, 2), 3), F(1, 2))
    C = build_scaling(4).c_minus
    assert C.row(3) == (Surd(F(1, 8), 7), Surd(F(1, 8), 21), Surd(F(-1, 8), 35), F(1, 8))


def test_c_plus_flip():
    assert c_plus_from_c_minus(Matrix([[1]])) == Matrix([[1]])
    Cp = build_scaling(2).c_plus
    assert Cp.row(1) == (Surd(F(1, 2), 3), F(1, 2))
    C = build_scaling(5).c_minus
    assert c_plus_from_c_minus(c_plus_from_c_minus(C)) == C


@pytest.mark.parametrize("n", [1, 4, 9, 16])
def test_diagonal_and_triangularity(n):
    pair = build_scaling(n)
    for k in range(n):
        assert pair.c_minus[k, k] == F(1, 2 ** k)
    assert pair.c_minus.is_lower_triangular() and pair.c_plus.is_lower_triangular()


def test_principal_nesting():
    big = build_scaling(12).c_minus
    for k in range(1, 12):
        assert big.submatrix(0, k, 0, k) == build_c_minus(k)


@pytest.mark.parametrize("n", [1, 4, 10])
def test_quadrature_identity(n):
    results = verify_quadrature_identity(build_scaling(n))
    assert results
    for r in results:
        assert r.passed, r
        if not r.exact:
            assert r.max_deviation <= 1e-25


def test_quadrature_identity_odd_rows_n4():
    C = build_scaling(4).c_minus
    assert sum((a * b for a, b in zip(C.row(0), C.row(2))), F(0)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_commutator(n):
    for r in verify_commutator_structure(build_scaling(n)):
        assert r.passed, r
    assert len(commutator_vector(n)) == n


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_fixed_vector(n):
    assert verify_fixed_vector(build_scaling(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_refinement_sampled(n):
    xs = np.random.default_rng(n).random(200)
    assert refinement_residual(n, xs) <= 1e-12


def test_refinement_exact():
    for n in range(1, 7):
        assert refinement_identity_exact(n)
