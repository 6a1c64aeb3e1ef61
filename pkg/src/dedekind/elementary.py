"""Elementary row operations, their matrices and their inverses.

Row indices are 1-based.  Operations do not carry a field; the scalar ``c``
is a canonical element of whatever field the target matrix lives in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import IndexOutOfRange
from .field import FieldElement, FieldSpec
from .matrix import Matrix


@dataclass(frozen=True)
class Swap:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("swap needs two distinct rows")
        if self.i < 1 or self.j < 1:
            raise IndexOutOfRange("row indices start at 1")


@dataclass(frozen=True)
class Scale:
    i: int
    c: FieldElement

    def __post_init__(self):
        if self.c == 0:
            raise ValueError("scale factor must be nonzero")
        if self.i < 1:
            raise IndexOutOfRange("row indices start at 1")


@dataclass(frozen=True)
class AddMultiple:
    """Add ``c`` times row ``j`` to row ``i``."""

    i: int
    j: int
    c: FieldElement

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("add-multiple needs two distinct rows")
        if self.i < 1 or self.j < 1:
            raise IndexOutOfRange("row indices start at 1")


ElementaryOp = Union[Swap, Scale, AddMultiple]


def _max_index(op: ElementaryOp) -> int:
    return op.i if isinstance(op, Scale) else max(op.i, op.j)


def _check(op: ElementaryOp, n: int) -> None:
    if _max_index(op) > n:
        raise IndexOutOfRange(f"{op} does not fit a matrix with {n} rows")


def elem_inverse(op: ElementaryOp, spec: FieldSpec) -> ElementaryOp:
    if isinstance(op, Swap):
        return op
    if isinstance(op, Scale):
        return Scale(op.i, spec.inv(op.c))
    return AddMultiple(op.i, op.j, spec.neg(op.c))


def elem_apply_left(op: ElementaryOp, A: Matrix) -> Matrix:
    """Row-operate on a copy of ``A``; equal to ``elem_to_matrix(op) @ A``."""
    _check(op, A.rows)
    spec = A.spec
    rows = list(A.row_tuples())
    if isinstance(op, Swap):
        rows[op.i - 1], rows[op.j - 1] = rows[op.j - 1], rows[op.i - 1]
    elif isinstance(op, Scale):
        rows[op.i - 1] = tuple(spec.mul(op.c, x) for x in rows[op.i - 1])
    else:
        src, c = rows[op.j - 1], op.c
        rows[op.i - 1] = tuple(spec.add(x, spec.mul(c, y)) for x, y in zip(rows[op.i - 1], src))
    return Matrix(spec, rows, A.cols, canonical=True)


def elem_apply_right(op: ElementaryOp, A: Matrix) -> Matrix:
    """Column form: returns ``A @ elem_to_matrix(op)`` without forming the product.

    Right multiplication by the matrix of ``AddMultiple(i, j, c)`` adds ``c``
    times column ``i`` to column ``j``.
    """
    _check(op, A.cols)
    spec = A.spec
    rows = [list(r) for r in A.row_tuples()]
    if isinstance(op, Swap):
        a, b = op.i - 1, op.j - 1
        for r in rows:
            r[a], r[b] = r[b], r[a]
    elif isinstance(op, Scale):
        a = op.i - 1
        for r in rows:
            r[a] = spec.mul(op.c, r[a])
    else:
        a, b = op.i - 1, op.j - 1
        for r in rows:
            r[b] = spec.add(r[b], spec.mul(op.c, r[a]))
    return Matrix(spec, rows, A.cols, canonical=True)


def elem_to_matrix(op: ElementaryOp, n: int, spec: FieldSpec) -> Matrix:
    _check(op, n)
    return elem_apply_left(op, Matrix.identity(spec, n))


def format_op(op: ElementaryOp, spec: FieldSpec) -> str:
    if isinstance(op, Swap):
        return f"swap {op.i} {op.j}"
    if isinstance(op, Scale):
        return f"scale {op.i} {spec.format(op.c)}"
    return f"addmul {op.i} {op.j} {spec.format(op.c)}"


def parse_op(text: str, spec: FieldSpec) -> ElementaryOp:
    parts = text.split()
    try:
        if parts[0] == "swap" and len(parts) == 3:
            return Swap(int(parts[1]), int(parts[2]))
        if parts[0] == "scale" and len(parts) == 3:
            return Scale(int(parts[1]), spec.parse(parts[2]))
        if parts[0] == "addmul" and len(parts) == 4:
            return AddMultiple(int(parts[1]), int(parts[2]), spec.parse(parts[3]))
    except (IndexError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad elementary operation {text!r}: {exc}") from None
    raise ValueError(f"bad elementary operation {text!r}")
