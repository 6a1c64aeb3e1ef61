"""Dense exact matrices and column vectors over a single field.

Indices in the public API are 1-based: ``A[1, 1]`` is the top-left entry.
Also hosts the one-plus-rest block decomposition and the matrix text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    EmptyMatrix,
    FieldMismatch,
    IndexOutOfRange,
    ParseError,
    ZeroDenominator,
    DivisionByZero,
)
from .field import FieldElement, FieldSpec, parse_literal


class Vector:
    __slots__ = ("spec", "entries")

    def __init__(self, spec: FieldSpec, entries: Iterable, *, canonical: bool = False):
        self.spec = spec
        if canonical:
            self.entries = tuple(entries)
        else:
            self.entries = tuple(spec.canonicalize(x) for x in entries)

    @classmethod
    def zeros(cls, spec: FieldSpec, dim: int) -> Vector:
        return cls(spec, (spec.zero,) * dim, canonical=True)

    @classmethod
    def basis(cls, spec: FieldSpec, dim: int, k: int) -> Vector:
        """The k-th standard basis vector (1-based)."""
        if not 1 <= k <= dim:
            raise IndexOutOfRange(f"basis index {k} outside 1..{dim}")
        vals = [spec.zero] * dim
        vals[k - 1] = spec.one
        return cls(spec, vals, canonical=True)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __getitem__(self, k: int) -> FieldElement:
        if not 1 <= k <= self.dim:
            raise IndexOutOfRange(f"index {k} outside 1..{self.dim}")
        return self.entries[k - 1]

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.spec == other.spec and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.spec, self.entries))

    def __repr__(self) -> str:
        return f"Vector({self.spec}, [{', '.join(map(self.spec.format, self.entries))}])"

    def literals(self) -> list[str]:
        return [self.spec.format(x) for x in self.entries]


class Matrix:
    """Immutable dense matrix; rows are stored as a tuple of tuples."""

    __slots__ = ("spec", "rows", "cols", "_data")

    def __init__(self, spec: FieldSpec, rows: Iterable[Iterable], cols: int | None = None,
                 *, canonical: bool = False):
        if canonical:
            data = tuple(tuple(r) for r in rows)
        else:
            data = tuple(tuple(spec.canonicalize(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionMismatch("column count of a matrix with no rows must be given")
            cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise DimensionMismatch("ragged rows")
        self.spec = spec
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> Matrix:
        z, o = spec.zero, spec.one
        return cls(spec, ((o if i == j else z for j in range(n)) for i in range(n)), n,
                   canonical=True)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls(spec, ((spec.zero,) * cols for _ in range(rows)), cols, canonical=True)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def entries(self) -> tuple[FieldElement, ...]:
        """Row-major flat view."""
        return tuple(x for r in self._data for x in r)

    def row_tuples(self) -> tuple[tuple[FieldElement, ...], ...]:
        return self._data

    def row(self, i: int) -> tuple[FieldElement, ...]:
        self._check(i, 1)
        return self._data[i - 1]

    def col(self, j: int) -> tuple[FieldElement, ...]:
        self._check(1, j)
        return tuple(r[j - 1] for r in self._data)

    def _check(self, i: int, j: int) -> None:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexOutOfRange(f"({i},{j}) outside a {self.rows}x{self.cols} matrix")

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        self._check(i, j)
        return self._data[i - 1][j - 1]

    def replace(self, i: int, j: int, value) -> Matrix:
        """Copy with one entry changed."""
        self._check(i, j)
        data = [list(r) for r in self._data]
        data[i - 1][j - 1] = self.spec.canonicalize(value)
        return Matrix(self.spec, data, self.cols, canonical=True)

    def transpose(self) -> Matrix:
        cols = zip(*self._data) if self.rows else ((),) * self.cols
        return Matrix(self.spec, cols, self.rows, canonical=True)

    def is_identity(self) -> bool:
        return self.is_square and all(
            x == (1 if i == j else 0)
            for i, r in enumerate(self._data) for j, x in enumerate(r)
        )

    def to_lists(self) -> list[list[FieldElement]]:
        return [list(r) for r in self._data]

    def literals(self) -> list[list[str]]:
        return [[self.spec.format(x) for x in r] for r in self._data]

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        if isinstance(other, Vector):
            return mat_apply(self, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.spec == other.spec and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self) -> int:
        return hash((self.spec, self.shape, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(r) for r in self.literals())
        return f"Matrix({self.spec}, {self.rows}x{self.cols}, [{body}])"


def _same_field(*objs) -> FieldSpec:
    spec = objs[0].spec
    for o in objs[1:]:
        if o.spec != spec:
            raise FieldMismatch(f"{spec} vs {o.spec}")
    return spec


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    spec = _same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    bcols = tuple(zip(*B.row_tuples())) if B.rows else ((),) * B.cols
    dot = spec.dot
    data = tuple(tuple(dot(r, c) for c in bcols) for r in A.row_tuples())
    return Matrix(spec, data, B.cols, canonical=True)


def mat_apply(A: Matrix, x: Vector) -> Vector:
    spec = _same_field(A, x)
    if A.cols != x.dim:
        raise DimensionMismatch(f"cannot apply {A.rows}x{A.cols} to a vector of dim {x.dim}")
    return Vector(spec, (spec.dot(r, x.entries) for r in A.row_tuples()), canonical=True)


def row_times(v: Vector, A: Matrix) -> Vector:
    """The row vector ``v^t A``, returned as a Vector."""
    spec = _same_field(v, A)
    if v.dim != A.rows:
        raise DimensionMismatch(f"row vector of dim {v.dim} times {A.rows}x{A.cols}")
    cols = zip(*A.row_tuples()) if A.rows else ((),) * A.cols
    return Vector(spec, (spec.dot(v.entries, c) for c in cols), canonical=True)


def vec_add(u: Vector, v: Vector) -> Vector:
    spec = _same_field(u, v)
    if u.dim != v.dim:
        raise DimensionMismatch(f"dims {u.dim} and {v.dim}")
    return Vector(spec, map(spec.add, u.entries, v.entries), canonical=True)


def vec_scale(c: FieldElement, v: Vector) -> Vector:
    return Vector(v.spec, (v.spec.mul(c, x) for x in v.entries), canonical=True)


def outer(u: Vector, w: Vector) -> Matrix:
    """The matrix ``u w^t``."""
    spec = _same_field(u, w)
    return Matrix(spec, ((spec.mul(a, b) for b in w.entries) for a in u.entries), w.dim,
                  canonical=True)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    spec = _same_field(A, B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes {A.shape} and {B.shape}")
    return Matrix(spec, (map(spec.add, r, s) for r, s in zip(A.row_tuples(), B.row_tuples())),
                  A.cols, canonical=True)


@dataclass(frozen=True)
class BlockParts:
    """``[[alpha, v^t], [u, tail]]`` for an n x n matrix."""

    alpha: FieldElement
    v: Vector
    u: Vector
    tail: Matrix


def block_split(A: Matrix) -> BlockParts:
    if not A.is_square:
        raise DimensionMismatch(f"block split needs a square matrix, got {A.rows}x{A.cols}")
    if A.rows == 0:
        raise EmptyMatrix("0x0 matrix has no block form")
    spec, data = A.spec, A.row_tuples()
    return BlockParts(
        alpha=data[0][0],
        v=Vector(spec, data[0][1:], canonical=True),
        u=Vector(spec, (r[0] for r in data[1:]), canonical=True),
        tail=Matrix(spec, (r[1:] for r in data[1:]), A.cols - 1, canonical=True),
    )


def block_join(parts: BlockParts) -> Matrix:
    spec = _same_field(parts.v, parts.u, parts.tail)
    m = parts.tail.rows
    if not (parts.tail.is_square and parts.v.dim == m and parts.u.dim == m):
        raise DimensionMismatch(
            f"inconsistent blocks: v {parts.v.dim}, u {parts.u.dim}, tail {parts.tail.shape}"
        )
    top = (parts.alpha,) + parts.v.entries
    rows = [top] + [(parts.u.entries[i],) + r for i, r in enumerate(parts.tail.row_tuples())]
    return Matrix(spec, rows, m + 1, canonical=True)


# --- text format ------------------------------------------------------------

def format_matrix(A: Matrix) -> str:
    head = "field rational" if not A.spec.is_prime_field else f"field gf {A.spec.modulus}"
    lines = [head, f"rows {A.rows} cols {A.cols}"]
    lines += [" ".join(r) for r in A.literals()]
    return "\n".join(lines) + "\n"


def _tokens(line: str):
    """Yield (1-based column, token) pairs of whitespace-separated tokens."""
    col, n = 0, len(line)
    while col < n:
        while col < n and line[col].isspace():
            col += 1
        if col >= n:
            break
        start = col
        while col < n and not line[col].isspace():
            col += 1
        yield start + 1, line[start:col]


def parse_matrix(text: str, source: str = "<string>", field: FieldSpec | None = None) -> Matrix:
    """Parse the matrix text format; ``field`` overrides the header's field."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def line_tokens(k: int):
        if k > len(lines):
            raise ParseError(source, k, 1, "unexpected end of file")
        return list(_tokens(lines[k - 1]))

    toks = line_tokens(1)
    words = [t for _, t in toks]
    if not words or words[0] != "field":
        raise ParseError(source, 1, toks[0][0] if toks else 1, "expected 'field'")
    eol = len(lines[0]) + 1
    kind = words[1] if len(words) > 1 else None
    if kind == "rational":
        if len(toks) > 2:
            raise ParseError(source, 1, toks[2][0], "trailing token")
        spec = FieldSpec.rational()
    elif kind == "gf":
        if len(toks) < 3:
            raise ParseError(source, 1, eol, "missing modulus")
        if len(toks) > 3:
            raise ParseError(source, 1, toks[3][0], "trailing token")
        col, tok = toks[2]
        if not tok.isdigit():
            raise ParseError(source, 1, col, f"bad modulus {tok!r}")
        try:
            spec = FieldSpec.gf(int(tok))
        except ValueError as exc:
            raise ParseError(source, 1, col, str(exc)) from None
    else:
        raise ParseError(source, 1, toks[1][0] if len(toks) > 1 else eol,
                         "expected 'field gf <p>' or 'field rational'")
    if field is not None:
        spec = field

    toks = line_tokens(2)
    expect = ["rows", None, "cols", None]
    dims = []
    for k, want in enumerate(expect):
        if k >= len(toks):
            raise ParseError(source, 2, len(lines[1]) + 1, "expected 'rows <r> cols <c>'")
        col, tok = toks[k]
        if want is None:
            if not tok.isdigit():
                raise ParseError(source, 2, col, f"bad dimension {tok!r}")
            dims.append(int(tok))
        elif tok != want:
            raise ParseError(source, 2, col, f"expected {want!r}")
    if len(toks) > 4:
        raise ParseError(source, 2, toks[4][0], "trailing token")
    r, c = dims

    data = []
    for i in range(r):
        k = 3 + i
        toks = line_tokens(k)
        row = []
        for col, tok in toks[:c]:
            try:
                row.append(spec.canonicalize(parse_literal(tok)))
            except (ValueError, ZeroDenominator, DivisionByZero) as exc:
                raise ParseError(source, k, col, f"bad entry {tok!r}: {exc}") from None
        if len(toks) < c:
            raise ParseError(source, k, len(lines[k - 1]) + 1,
                             f"expected {c} entries, found {len(toks)}")
        if len(toks) > c:
            raise ParseError(source, k, toks[c][0], f"expected {c} entries, found {len(toks)}")
        data.append(row)
    for k in range(3 + r, len(lines) + 1):
        toks = line_tokens(k)
        if toks:
            raise ParseError(source, k, toks[0][0], "unexpected content after matrix rows")
    return Matrix(spec, data, c, canonical=True)


def read_matrix(path, field: FieldSpec | None = None) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read(), str(path), field)


def write_matrix(path, A: Matrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(A))


def from_rows(spec: FieldSpec, rows: Sequence[Sequence]) -> Matrix:
    """Convenience constructor; entries may be ints, Fractions or literal strings."""
    return Matrix(spec, rows, len(rows[0]) if rows else 0)
