"""Polynomials, exact matrices and exact rank."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kiselman.errors import NotNilpotentError
from kiselman.linalg import exact_rank
from kiselman.matrices import (
    Matrix,
    diagonal_unit,
    height_of_matrix,
    int_matrix,
    matrix_from_json,
    matrix_to_json,
    nilpotency_class_of_matrix,
)
from kiselman.polynomials import MPoly


def test_mpoly_arithmetic():
    x, y = MPoly.var(1, 2), MPoly.var(1, 3)
    p = (x + 1) * (x - 1)
    assert p == x * x - 1
    assert (x * y - y * x).is_zero() and not x.is_zero()
    assert 2 - x == -(x - 2)
    assert MPoly.const(3) == 3 and hash(MPoly.const(3)) == hash(MPoly.lift(3))
    assert p.evaluate({(1, 2): 5}) == 24
    assert MPoly.from_json(p.to_json()) == p
    assert repr(MPoly.const(0)) == "0"


def test_matrix_ops():
    a = int_matrix([[1, 2], [3, 4]])
    assert a @ Matrix.identity(2) == a
    assert (a @ a).tolist() == [[7, 10], [15, 22]]
    assert (a - a).is_zero() and a + a == a.scale(2)
    assert a ** 0 == Matrix.identity(2)
    assert matrix_from_json(matrix_to_json(a)) == a
    assert diagonal_unit(3, 2).tolist() == [[0, 0, 0], [0, 1, 0], [0, 0, 0]]
    assert height_of_matrix(Matrix.identity(2)) == 6
    with pytest.raises(NotNilpotentError):
        nilpotency_class_of_matrix(Matrix.identity(2))
    with pytest.raises(ValueError):
        Matrix(((1, 2),))


def test_matrix_json_fractions():
    m = Matrix(((Fraction(1, 2), Fraction(0)), (Fraction(-3), Fraction(1))))
    assert matrix_from_json(matrix_to_json(m)) == m


def test_rank_small():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([{0: Fraction(1, 3), 5: 1}, {0: 1, 5: 3}, {2: 7}]) == 2


def test_rank_against_sympy():
    rng = random.Random(11)
    for _ in range(60):
        r, c = rng.randint(1, 9), rng.randint(1, 9)
        rows = [[rng.choice([0, 0, 0, 1, -1, 2, 3]) for _ in range(c)] for _ in range(r)]
        # force some dependencies
        if r > 2:
            rows[-1] = [a - 2 * b for a, b in zip(rows[0], rows[1])]
        assert exact_rank(rows) == sympy.Matrix(rows).rank()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5),
                         min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_property(rows):
    assert exact_rank(rows) == sympy.Matrix(rows).rank()
