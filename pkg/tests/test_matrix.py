from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from confvand.matrix import Matrix, SingularMatrixError, determinant, identity_residual, oracle_invert, oracle_solve

from conftest import rationals


def test_identity_inverts_to_identity():
    assert oracle_invert(Matrix.identity(4)) == Matrix.identity(4)


def test_unipotent_2x2():
    assert oracle_invert(Matrix([[1, 1], [0, 1]])) == Matrix([[1, -1], [0, 1]])


def test_needs_pivoting():
    m = Matrix([[0, 1], [1, 0]])
    assert oracle_invert(m) == m


def test_singular_and_non_square():
    with pytest.raises(SingularMatrixError):
        oracle_invert(Matrix([[1, 2], [2, 4]]))
    with pytest.raises(ValueError):
        oracle_invert(Matrix([[1, 2, 3], [4, 5, 6]]))
    with pytest.raises(ValueError):
        oracle_solve(Matrix.identity(2), [1])


def test_matmul_shapes():
    a = Matrix([[1, 2, 3]])
    b = Matrix([[1], [1], [1]])
    assert (a @ b) == Matrix([[6]])
    assert a @ [1, 0, 0] == [1]
    with pytest.raises(ValueError):
        a @ a


def test_identity_residual():
    assert identity_residual(Matrix.identity(3)) == 0.0
    assert identity_residual(Matrix([[1.0, 1e-3], [0.0, 1.0]])) == pytest.approx(1e-3)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(rationals(), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_oracle_inverse_when_nonsingular(rows):
    m = Matrix(rows)
    if determinant(m) == 0:
        with pytest.raises(SingularMatrixError):
            oracle_invert(m)
        return
    inv = oracle_invert(m)
    assert m @ inv == Matrix.identity(m.rows)
    assert inv @ m == Matrix.identity(m.rows)
    u = [Fraction(i + 1) for i in range(m.rows)]
    assert m @ oracle_solve(m, u) == u


def test_determinant_small():
    assert determinant(Matrix([[1, 2], [3, 4]])) == -2
    assert determinant(Matrix([[0, 1], [1, 0]])) == -1
