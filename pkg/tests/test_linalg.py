from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cclab.linalg import GF, Mat, QQ, column_complement, hstack

F7 = GF(7)


def rand_mat(field, rows, cols, entries):
    return Mat(field, rows, cols, [entries[i * cols:(i + 1) * cols]
                                   for i in range(rows)])


mats33 = st.lists(st.integers(-9, 9), min_size=9, max_size=9).map(
    lambda e: rand_mat(QQ, 3, 3, [Fraction(x) for x in e]))


@given(mats33)
def test_rank_bounded(m):
    assert 0 <= m.rank() <= 3


@given(mats33)
def test_nullspace_in_kernel(m):
    ns = m.nullspace()
    assert m.mul(ns).is_zero()
    assert m.rank() + ns.cols == 3


@given(mats33)
def test_solve_consistent(m):
    b = m.mul(Mat(QQ, 3, 1, [[1], [2], [3]]))
    x = m.solve(b)
    assert m.mul(x) == b


def test_inverse():
    m = Mat(F7, 2, 2, [[1, 2], [3, 4]])
    inv = m.inverse()
    assert m.mul(inv) == Mat.identity(F7, 2)


def test_inverse_singular_raises():
    m = Mat(QQ, 2, 2, [[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        m.inverse()


def test_gf_fraction_lift():
    assert F7.of(Fraction(1, 2)) == 4  # 2 * 4 = 8 = 1 mod 7


def test_zero_dimensional_matrices():
    a = Mat(QQ, 0, 3)
    b = Mat(QQ, 3, 0)
    assert a.mul(b).rows == 0
    assert b.mul(a).rank() == 0
    assert a.rank() == 0
    assert b.nullspace().cols == 0


def test_column_complement():
    basis = Mat(QQ, 3, 1, [[1], [1], [0]])
    comp = column_complement(QQ, basis)
    assert comp.cols == 2
    assert hstack(QQ, [basis, comp], rows=3).rank() == 3


def test_solve_inconsistent_raises():
    m = Mat(QQ, 2, 1, [[1], [1]])
    b = Mat(QQ, 2, 1, [[1], [2]])
    with pytest.raises(ValueError):
        m.solve(b)
