from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind.elementary import (
    AddMultiple,
    Scale,
    Swap,
    elem_apply_left,
    elem_apply_right,
    elem_inverse,
    elem_to_matrix,
    format_op,
    parse_op,
)
from dedekind.errors import IndexOutOfRange
from dedekind.matrix import Matrix, mat_mul

from conftest import GF7, Q, elements, fields, mat, matrices, nonzero_elements


def test_to_matrix_examples():
    assert elem_to_matrix(Swap(1, 2), 2, Q) == mat(Q, [[0, 1], [1, 0]])
    assert elem_to_matrix(Scale(1, 3), 2, GF7) == mat(GF7, [[3, 0], [0, 1]])
    assert elem_to_matrix(AddMultiple(2, 1, Fraction(5)), 2, Q) == mat(Q, [[1, 0], [5, 1]])


def test_to_matrix_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        elem_to_matrix(Swap(1, 3), 2, Q)
    with pytest.raises(IndexOutOfRange):
        elem_apply_left(Scale(4, 1), Matrix.identity(Q, 3))


def test_invalid_ops():
    with pytest.raises(ValueError):
        Swap(2, 2)
    with pytest.raises(ValueError):
        AddMultiple(1, 1, 3)
    with pytest.raises(ValueError):
        Scale(1, 0)
    with pytest.raises(IndexOutOfRange):
        Swap(0, 1)


def test_inverse_examples():
    assert elem_inverse(Swap(1, 3), Q) == Swap(1, 3)
    # 3*5 = 15 = 2*7 + 1
    assert elem_inverse(Scale(2, 3), GF7) == Scale(2, 5)
    assert elem_inverse(AddMultiple(1, 2, Fraction(4)), Q) == AddMultiple(1, 2, Fraction(-4))


def test_apply_left_examples():
    assert elem_apply_left(Swap(1, 2), mat(Q, [[0, 1], [1, 0]])) == Matrix.identity(Q, 2)
    A = mat(Q, [[1, 2], [3, 4]])
    assert elem_apply_left(AddMultiple(2, 1, Fraction(-3)), A) == mat(Q, [[1, 2], [0, -2]])
    assert elem_apply_left(Scale(1, Fraction(1)), A) == A


@st.composite
def ops_and_matrix(draw):
    spec = draw(fields)
    n = draw(st.integers(2, 6))
    cols = draw(st.integers(0, 5))
    i, j = draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))
    kind = draw(st.sampled_from(["swap", "scale", "add"]))
    if kind == "swap":
        op = Swap(i, j)
    elif kind == "scale":
        op = Scale(i, spec.canonicalize(draw(nonzero_elements(spec))))
    else:
        op = AddMultiple(i, j, spec.canonicalize(draw(elements(spec))))
    return spec, n, op, draw(matrices(spec, n, cols))


@given(ops_and_matrix())
def test_apply_left_is_left_multiplication(case):
    spec, n, op, A = case
    assert elem_apply_left(op, A) == mat_mul(elem_to_matrix(op, n, spec), A)


@given(ops_and_matrix())
def test_inverse_undoes(case):
    spec, n, op, A = case
    inv = elem_inverse(op, spec)
    assert elem_apply_left(inv, elem_apply_left(op, A)) == A
    assert mat_mul(elem_to_matrix(inv, n, spec), elem_to_matrix(op, n, spec)) == \
        Matrix.identity(spec, n)


@given(ops_and_matrix())
def test_apply_right_is_right_multiplication(case):
    spec, n, op, A = case
    B = A.transpose() if A.cols else Matrix.zeros(spec, 0, n)
    assert elem_apply_right(op, B) == mat_mul(B, elem_to_matrix(op, n, spec))


@given(ops_and_matrix())
def test_op_text_round_trip(case):
    spec, _, op, _ = case
    assert parse_op(format_op(op, spec), spec) == op


def test_swap_is_involution():
    for n in range(2, 6):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    E = elem_to_matrix(Swap(i, j), n, Q)
                    assert mat_mul(E, E) == Matrix.identity(Q, n)
                    assert elem_inverse(Swap(i, j), Q) == Swap(i, j)


def test_op_text_format():
    assert format_op(AddMultiple(2, 1, Fraction(-1, 2)), Q) == "addmul 2 1 -1/2"
    assert format_op(Scale(1, 3), GF7) == "scale 1 3"
    assert format_op(Swap(1, 2), GF7) == "swap 1 2"


@pytest.mark.parametrize("text", ["swap 1", "swap 1 1", "scale 1 0", "mul 1 2", "addmul 1 2 x", ""])
def test_bad_op_text(text):
    with pytest.raises(ValueError):
        parse_op(text, Q)
