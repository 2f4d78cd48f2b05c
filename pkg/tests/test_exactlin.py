from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from qlogic.exactlin import (
    ComplexRational as C,
    Matrix,
    Vector,
    inner_product,
    kernel_basis,
    orth_complement_basis,
    parse_scalar,
    parse_vector,
    rank,
    rref,
    row_space_basis,
    column_space_basis,
)

from conftest import scalars, vectors

I = C(0, 1)


def test_normal_form():
    z = C(Fraction(2, -4), Fraction(0, 7))
    assert z.re == Fraction(-1, 2) and z.re.denominator == 2
    assert C(0).re.denominator == 1 and C(0).im == 0


@pytest.mark.parametrize("x, y, expected", [
    ((1, 0), (0, 1), C(0)),
    ((1, I), (1, I), C(2)),
    ((I, 0), (1, 0), C(0, -1)),
])
def test_inner_product_examples(x, y, expected):
    assert inner_product(Vector(x), Vector(y)) == expected


def test_inner_product_conjugates_first_slot():
    x, y = Vector([I]), Vector([1])
    assert inner_product(x, y) == inner_product(y, x).conjugate()


def test_inner_product_dim_mismatch():
    with pytest.raises(ValueError):
        inner_product(Vector([1]), Vector([1, 0]))


def test_rref_examples():
    assert rref(Matrix.identity(2)) == Matrix.identity(2)
    assert rref(Matrix([[1, 1], [1, 1]])) == Matrix([[1, 1], [0, 0]])
    assert rref(Matrix.zeros(2, 3)) == Matrix.zeros(2, 3)


def test_kernel_examples():
    assert kernel_basis(Matrix([[1, -1]])) == [Vector([1, 1])]
    assert kernel_basis(Matrix.identity(3)) == []
    assert len(kernel_basis(Matrix.zeros(1, 2))) == 2


def test_orth_complement_examples():
    assert orth_complement_basis([Vector([1, 0])], 2) == [Vector([0, 1])]
    # <(1,i),(i,1)> = i + (-i) = 0, computed by hand
    (v,) = orth_complement_basis([Vector([1, I])], 2)
    assert row_space_basis([v], 2) == row_space_basis([Vector([I, 1])], 2)
    assert inner_product(Vector([1, I]), v) == 0
    assert orth_complement_basis([Vector([1, 0]), Vector([0, 1])], 2) == []


def test_matrix_ops():
    a = Matrix([[1, I], [0, 2]])
    assert a @ Matrix.identity(2) == a
    assert (a + a) == a.scale(2)
    assert a @ Vector([1, 1]) == Vector([C(1, 1), C(2)])
    assert column_space_basis(Matrix([[1, 2], [2, 4]])) == [Vector([1, 2])]
    assert a.transpose().transpose() == a


@given(scalars, scalars)
def test_exact_add_sub(a, b):
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a


@given(st.lists(vectors(3), min_size=1, max_size=4))
def test_rref_idempotent_and_rank_nullity(rows):
    m = Matrix.from_rows(rows, 3)
    r = rref(m)
    assert rref(r) == r
    assert rank(m) + len(kernel_basis(m)) == m.cols
    for k in kernel_basis(m):
        assert (m @ k).is_zero()


@given(st.lists(vectors(3), min_size=0, max_size=3))
def test_double_orth_complement_regenerates_span(vs):
    once = orth_complement_basis(vs, 3)
    twice = orth_complement_basis(once, 3)
    assert row_space_basis(twice, 3) == row_space_basis(vs, 3)


@pytest.mark.parametrize("text, expected", [
    ("1/1+0/1i", C(1)),
    ("0/1-2/3i", C(0, Fraction(-2, 3))),
    ("-i", C(0, -1)),
    ("i", I),
    ("2i", C(0, 2)),
    ("1 + i", C(1, 1)),
    ("-3/4", C(Fraction(-3, 4))),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


def test_parse_vector_and_roundtrip():
    v = parse_vector("(1/1+0/1i, 0/1-2/3i)")
    assert v == Vector([1, C(0, Fraction(-2, 3))])
    assert parse_vector(str(v)) == v
    with pytest.raises(ValueError):
        parse_vector("1, 2")
    with pytest.raises(ValueError):
        parse_scalar("1/2x")


@given(vectors(3, scalars))
def test_vector_text_roundtrip(v):
    assert parse_vector(str(v)) == v
