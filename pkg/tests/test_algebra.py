import itertools
from fractions import Fraction

import pytest
import sympy

from kiselman.algebra import (
    AlgebraElement,
    algebra_multiply,
    corner_dimension,
    corner_dimensions,
    idempotent_system_check,
    kiselman_projection,
    module_faithfulness_check,
    module_is_homomorphism,
    nonfaithful_projective_witness,
    primitive_idempotent,
    projective_module,
    psi_linear,
    rho,
    rho_linear,
    sandwich_vectors,
    size_recursion_check,
)
from kiselman.errors import InvalidContentError, NotIdempotentError, RankMismatchError
from kiselman.matrices import Matrix, diagonal_unit
from kiselman.semigroup import Element, all_contents, enumerate_semigroup, idempotent

SIZES = {1: 2, 2: 5, 3: 18, 4: 115}


def A(letters, n, c=1):
    return AlgebraElement.of(tuple(letters), n, c)


def gen(i, n):
    return AlgebraElement.generator(i, n)


def one(n):
    return AlgebraElement.unit(n)


def test_multiply_examples():
    assert algebra_multiply(one(2) - gen(1, 2), gen(1, 2)) == 0
    assert algebra_multiply(gen(2, 2), one(2) - gen(1, 2)) == gen(2, 2) - A((2, 1), 2)
    x = A((1, 2), 2, Fraction(3, 4))
    assert one(2) * x == x * one(2) == x
    # relations hold after linear extension
    assert A((1, 2, 1), 2) == A((2, 1), 2)
    assert 2 * gen(1, 2) - gen(1, 2) == gen(1, 2)
    with pytest.raises(RankMismatchError):
        gen(1, 2) * gen(1, 3)


def test_json_and_repr():
    a = primitive_idempotent({2}, 2)
    assert repr(a) == "a2 - a2a1"
    assert AlgebraElement.from_json(a.to_json(), 2) == a
    assert a.to_json(enumerate_semigroup(2)) == [
        {"word": [2], "coeff": "1/1"}, {"word": [2, 1], "coeff": "-1/1"}]


def test_rho_examples():
    n = 3
    assert all(rho(X, Element.unit(n)) == 1 for X in all_contents(n))
    assert rho({1}, Element.of((1,), n)) == 1 and rho({1}, Element.of((2,), n)) == 0
    assert all(rho(range(1, n + 1), x) == 1 for x in enumerate_semigroup(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rho_is_multiplicative(n):
    els = enumerate_semigroup(n).elements
    for X in all_contents(n):
        for x, y in itertools.product(els, repeat=2):
            assert rho(X, x * y) == rho(X, x) * rho(X, y)


def test_primitive_idempotent_examples():
    assert primitive_idempotent({1}, 1) == gen(1, 1)
    assert primitive_idempotent((), 1) == one(1) - gen(1, 1)
    assert primitive_idempotent({2}, 2) == gen(2, 2) - A((2, 1), 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_idempotent_system(n):
    report = idempotent_system_check(n)
    assert report.ok, report.violations
    assert report.count == 2**n


def test_kiselman_projection_examples():
    assert kiselman_projection(3, 1) == one(3) - gen(3, 3)
    assert kiselman_projection(2, 2) == gen(2, 2)
    assert psi_linear(gen(2, 2)) == diagonal_unit(2, 2)
    with pytest.raises(ValueError):
        kiselman_projection(3, 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projections_map_to_diagonal_units(n):
    ps = [kiselman_projection(n, i) for i in range(1, n + 1)]
    for i, p in enumerate(ps, start=1):
        assert psi_linear(p) == diagonal_unit(n, i)
    assert sum(ps[1:], ps[0]) == one(n)


def _dense_rank(table, left, right):
    vecs = sandwich_vectors(table, left, right)
    return sympy.Matrix([[v.get(k, 0) for k in range(len(table))] for v in vecs]).rank()


def test_corner_dimension_examples():
    t2, t3 = enumerate_semigroup(2), enumerate_semigroup(3)
    assert corner_dimension(t2, gen(2, 2), one(2) - gen(2, 2)) == 0
    assert corner_dimension(t2, one(2) - gen(2, 2), gen(2, 2)) == 1
    assert corner_dimension(t3, one(3) - gen(3, 3), gen(3, 3)) == 8
    with pytest.raises(NotIdempotentError):
        corner_dimension(t2, 2 * gen(1, 2), gen(1, 2))


def test_corner_dimension_against_sympy():
    t3 = enumerate_semigroup(3)
    an, comp = gen(3, 3), one(3) - gen(3, 3)
    for left, right in itertools.product((an, comp), repeat=2):
        assert corner_dimension(t3, left, right) == _dense_rank(t3, left, right)


@pytest.mark.parametrize("n,dims", [
    (2, (2, 1, 0, 2)),
    (3, (5, 8, 0, 5)),
    (4, (18, 79, 0, 18)),
])
def test_corner_dimensions(n, dims):
    d = corner_dimensions(n)
    assert (d.top, d.mixed_down, d.mixed_up, d.bottom) == dims
    assert d.top == d.bottom == SIZES[n - 1]
    assert d.total == SIZES[n]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_size_recursion(n):
    assert size_recursion_check(n)


def test_projective_module_examples():
    m = projective_module(2)
    assert [b.letters for b in m.basis] == [(2,), (1, 2)]
    assert m.dimension == 2
    assert m.action(Element.unit(2)) == Matrix.identity(2)
    assert m.action(Element.of((2, 1), 2)).is_zero()


@pytest.mark.parametrize("n,dim", [(1, 1), (2, 2), (3, 5), (4, 18)])
def test_projective_module_faithful(n, dim):
    table = enumerate_semigroup(n)
    m = projective_module(n)
    assert m.dimension == dim
    assert module_faithfulness_check(m, table)
    assert module_is_homomorphism(m, table)


def test_nonfaithful_witness_examples():
    assert nonfaithful_projective_witness(2, {1, 2})
    assert nonfaithful_projective_witness(2, ())
    assert nonfaithful_projective_witness(3, {1})
    with pytest.raises(InvalidContentError):
        nonfaithful_projective_witness(3, {2, 3})


@pytest.mark.parametrize("n", [2, 3])
def test_nonfaithful_witness_direct_products(n):
    w = AlgebraElement.of(idempotent(range(2, n + 1), n)) - AlgebraElement.of(
        idempotent(range(1, n + 1), n))
    assert not w.is_zero()
    for X in all_contents(n):
        if X == frozenset(range(2, n + 1)):
            continue
        ex = primitive_idempotent(X, n)
        assert all((w * x * ex).is_zero() for x in enumerate_semigroup(n))
        assert nonfaithful_projective_witness(n, X)


def test_rho_linear():
    e = primitive_idempotent({1}, 2)
    assert rho_linear({1}, e) == 1 and rho_linear({1, 2}, e) == 0
