from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from alpert.errors import IncompatibleRadicands, NotPositiveDefinite, SingularMatrix
from alpert.legendre import jacobi_matrix
from alpert.ratmath import (Matrix, Surd, cholesky, determinant, ldlt, solve_linear, squarefree_decompose,
                            surd_add, surd_mul, to_mp, ul_ldlt)

F = Fraction


def test_surd_normalizes_square_factors():
    s = Surd(1, 12)
    assert (s.coeff, s.radicand) == (2, 3)
    assert Surd(0, 7).radicand == 1
    assert Surd.sqrt(F(3, 4)) == Surd(F(1, 2), 3)


def test_surd_mul_examples():
    assert surd_mul(Surd(1, 3), Surd(1, 3)) == 3
    assert surd_mul(Surd(F(1, 2), 3), Surd(1, 1)) == Surd(F(1, 2), 3)
    assert surd_mul(Surd(1, 6), Surd(1, 10)) == Surd(2, 15)


def test_surd_add_examples():
    assert surd_add(Surd(F(1, 2), 3), Surd(F(1, 4), 3)) == Surd(F(3, 4), 3)
    assert surd_add(Surd(0, 1), Surd(2, 5)) == Surd(2, 5)
    with pytest.raises(IncompatibleRadicands):
        surd_add(Surd(1, 2), Surd(1, 3))


def test_surd_add_product_square_radicands():
    # sqrt(8) and sqrt(2) share a radicand after normalization
    assert Surd(1, 8) + Surd(1, 2) == Surd(3, 2)


def test_surd_ordering_and_str():
    assert Surd(-1, 3) < Surd(1, 2) < Surd(1, 3)
    assert str(Surd(F(3, 4), 3)) == "3/4*sqrt(3)"
    assert float(Surd(F(1, 2), 2)) == pytest.approx(2 ** -0.5)


def test_squarefree_decompose():
    assert squarefree_decompose(72) == (6, 2, True)
    assert squarefree_decompose(1) == (1, 1, True)
    k, r, ok = squarefree_decompose(2 ** 4 * 3 * 101 ** 2)
    assert (k, r, ok) == (4 * 101, 3, True)


radicands = st.integers(min_value=1, max_value=500)
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=30)
surds = st.builds(Surd, coeffs, radicands)


@given(surds, surds, surds)
def test_surd_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(surds)
def test_normalization_idempotent(a):
    b = Surd(a.coeff, a.radicand)
    assert (b.coeff, b.radicand) == (a.coeff, a.radicand)


@given(surds)
def test_surd_float_matches_mp(a):
    with mpmath.workprec(128):
        assert abs(to_mp(a) - mpmath.mpf(a.coeff.numerator) / a.coeff.denominator * mpmath.sqrt(a.radicand)) < mpmath.mpf(2) ** -100 * (1 + abs(float(a)))


def test_ldlt_examples():
    L, D = ldlt(Matrix.identity(3))
    assert L == Matrix.identity(3) and D == Matrix.identity(3)
    L, D = ldlt(Matrix([[1, F(1, 2)], [F(1, 2), F(1, 3)]]))
    assert L == Matrix([[1, 0], [F(1, 2), 1]])
    assert D == Matrix.diag([1, F(1, 12)])
    with pytest.raises(NotPositiveDefinite):
        ldlt(Matrix([[0, 0], [0, 1]]))


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_ldlt_reassembles(rows):
    A = Matrix(rows)
    M = A @ A.T + Matrix.identity(4)      # SPD
    L, D = ldlt(M)
    assert L.is_lower_triangular()
    assert L @ D @ L.T == M


def test_ul_ldlt_is_upper():
    M = Matrix([[4, 2, 1], [2, 3, 1], [1, 1, 2]])
    U, D = ul_ldlt(M)
    assert U.is_upper_triangular()
    assert U @ D @ U.T == M


def test_cholesky_hilbert():
    H = Matrix([[F(1, i + j + 1) for j in range(3)] for i in range(3)])
    R = cholesky(H)
    assert R.is_lower_triangular()
    assert R[1, 1] == Surd(F(1, 6), 3)


def test_solve_linear_examples():
    b = [F(1), F(2)]
    assert solve_linear(Matrix.identity(2), b) == b
    assert solve_linear(Matrix([[2, 0], [0, 4]]), [1, 1]) == [F(1, 2), F(1, 4)]
    J = jacobi_matrix(2)
    x = solve_linear(J, [0, 1])
    back = J @ Matrix([[v] for v in x])
    assert back.col(0) == (0, 1)
    with pytest.raises(SingularMatrix):
        solve_linear(Matrix([[1, 2], [2, 4]]), [1, 0])


def test_determinant():
    assert determinant(Matrix([[F(1, 2), F(1, 3)], [F(1, 3), F(1, 4)]])) == F(1, 72)
    assert determinant(Matrix([[0, 1], [1, 0]])) == -1
    assert determinant(Matrix([[1, 2], [2, 4]])) == 0
