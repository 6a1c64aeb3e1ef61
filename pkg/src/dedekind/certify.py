"""Certified two-sided inverses.

:func:`prove_two_sided` takes ``A, B`` with ``A @ B == I`` and peels one
row/column per level: row operations bring the first column of ``A`` to
``e_1``, the inverse operations are pushed onto ``B`` from the right so the
product stays the identity, and the trailing blocks form the next, smaller,
pair.  Each level records enough block data for :func:`verify_certificate`
to replay the argument with plain matrix products and conclude ``B @ A == I``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .elementary import (
    AddMultiple,
    ElementaryOp,
    Scale,
    Swap,
    elem_apply_left,
    elem_apply_right,
    elem_inverse,
    elem_to_matrix,
    format_op,
    parse_op,
)
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    InternalContradiction,
    MalformedCertificate,
    NotLeftInverse,
    ZeroFirstColumn,
)
from .field import FieldElement, FieldSpec
from .matrix import (
    Matrix,
    Vector,
    block_split,
    mat_mul,
    row_times,
    vec_add,
)


# --- row reduction ----------------------------------------------------------

def _rref(spec: FieldSpec, rows, ncols: int, pivot_cols: int | None = None):
    """Reduced row echelon form of a list of rows.

    Pivots are searched only among the first ``pivot_cols`` columns.  Returns
    the reduced rows (lists) and the 0-based pivot columns.
    """
    R = [list(r) for r in rows]
    m = len(R)
    limit = ncols if pivot_cols is None else pivot_cols
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == m:
            break
        piv = next((i for i in range(r, m) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = spec.inv(R[r][c])
        R[r] = [spec.mul(inv, x) for x in R[r]]
        prow = R[r]
        for i in range(m):
            f = R[i][c]
            if i != r and f != 0:
                R[i] = [spec.sub(x, spec.mul(f, y)) for x, y in zip(R[i], prow)]
        pivots.append(c)
        r += 1
    return R, pivots


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and 1-based pivot columns."""
    R, pivots = _rref(A.spec, A.row_tuples(), A.cols)
    return Matrix(A.spec, R, A.cols, canonical=True), [c + 1 for c in pivots]


def _kernel_from_rref(spec: FieldSpec, R, pivots: Sequence[int], ncols: int) -> list[Vector]:
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [spec.zero] * ncols
        x[f] = spec.one
        for k, pc in enumerate(pivots):
            x[pc] = spec.neg(R[k][f])
        basis.append(Vector(spec, x, canonical=True))
    return basis


def solve_homogeneous(A: Matrix) -> list[Vector]:
    """Basis of ``{x : A x = 0}``, one vector per free column, free entry set to 1."""
    R, pivots = _rref(A.spec, A.row_tuples(), A.cols)
    return _kernel_from_rref(A.spec, R, pivots, A.cols)


def rank(A: Matrix) -> int:
    return len(_rref(A.spec, A.row_tuples(), A.cols)[1])


@dataclass(frozen=True)
class SingularReport:
    """``A`` has no inverse; ``witness`` is a nonzero vector with ``A @ witness == 0``."""

    witness: Vector


def left_inverse(A: Matrix) -> Matrix | SingularReport:
    """Gauss-Jordan on ``[A | I]``.

    Returns ``B`` with ``A @ B == I``; ``B @ A == I`` is checked too before
    returning.  A singular input gives a :class:`SingularReport`.
    """
    if not A.is_square:
        raise DimensionMismatch(f"inverse of a non-square {A.rows}x{A.cols} matrix")
    spec, n = A.spec, A.rows
    ident = Matrix.identity(spec, n).row_tuples()
    aug = [r + e for r, e in zip(A.row_tuples(), ident)]
    R, pivots = _rref(spec, aug, 2 * n, pivot_cols=n)
    if len(pivots) < n:
        left = [row[:n] for row in R]
        witness = _kernel_from_rref(spec, left, pivots, n)[0]
        return SingularReport(witness)
    B = Matrix(spec, (row[n:] for row in R), n, canonical=True)
    if not (mat_mul(A, B).is_identity() and mat_mul(B, A).is_identity()):
        raise InternalContradiction("Gauss-Jordan produced a non-inverse")
    return B


def reduce_first_column(A: Matrix) -> tuple[list[ElementaryOp], Matrix]:
    """Row operations (in application order) taking column 1 of ``A`` to ``e_1``.

    Pivot on the topmost nonzero entry, swap it up, scale it to 1, then clear
    the rest of the column top to bottom.
    """
    if not A.is_square:
        raise DimensionMismatch(f"expected a square matrix, got {A.rows}x{A.cols}")
    if A.rows == 0:
        raise ZeroFirstColumn("0x0 matrix has no first column")
    spec = A.spec
    col = A.col(1)
    piv = next((i for i, x in enumerate(col, start=1) if x != 0), None)
    if piv is None:
        raise ZeroFirstColumn("first column contains only zeros")
    ops: list[ElementaryOp] = []
    cur = A

    def emit(op):
        nonlocal cur
        ops.append(op)
        cur = elem_apply_left(op, cur)

    if piv != 1:
        emit(Swap(1, piv))
    if cur[1, 1] != 1:
        emit(Scale(1, spec.inv(cur[1, 1])))
    for i in range(2, A.rows + 1):
        if cur[i, 1] != 0:
            emit(AddMultiple(i, 1, spec.neg(cur[i, 1])))
    return ops, cur


# --- certificates -------------------------------------------------------------

@dataclass(frozen=True)
class CertLevel:
    """One peeling step at size ``n``.

    ``ops`` are in application order; with ``M(op)`` the elementary matrix,
    ``A* = M(ops[-1]) ... M(ops[0]) A`` and
    ``B* = B M(ops[0])^-1 ... M(ops[-1])^-1``.  ``B*`` is recorded as its
    blocks ``[[beta_star, w_star^t], [h_star, b_tail]]``.
    """

    n: int
    ops: tuple[ElementaryOp, ...]
    a_star_row: Vector
    beta_star: FieldElement
    w_star: Vector
    h_star: Vector
    b_tail: Matrix


@dataclass(frozen=True)
class Certificate:
    spec: FieldSpec
    n: int
    levels: tuple[CertLevel, ...]
    base: tuple[FieldElement, FieldElement] | None  # None is the n = 0 marker

    def check_shape(self) -> None:
        """Raise MalformedCertificate unless the size chain is n, n-1, ..., 1."""
        if self.n < 0:
            raise MalformedCertificate("negative size")
        if len(self.levels) != self.n:
            raise MalformedCertificate(f"{len(self.levels)} levels for size {self.n}")
        for k, lev in enumerate(self.levels):
            m = self.n - k
            if lev.n != m:
                raise MalformedCertificate(f"level {k + 1} has size {lev.n}, expected {m}")
            dims = (lev.a_star_row.dim, lev.w_star.dim, lev.h_star.dim,
                    lev.b_tail.rows, lev.b_tail.cols)
            if any(d != m - 1 for d in dims):
                raise MalformedCertificate(f"level {k + 1} has blocks of the wrong size")
            for obj in (lev.a_star_row, lev.w_star, lev.h_star, lev.b_tail):
                if obj.spec != self.spec:
                    raise MalformedCertificate(f"level {k + 1} mixes fields")
        if (self.base is None) != (self.n == 0):
            raise MalformedCertificate("base must be a scalar pair exactly when n >= 1")


def _check_identity(P: Matrix):
    """First (row-major) entry where ``P`` differs from the identity, or None."""
    for i, row in enumerate(P.row_tuples(), start=1):
        for j, x in enumerate(row, start=1):
            want = 1 if i == j else 0
            if x != want:
                return i, j, x, want
    return None


def _same_square_pair(A: Matrix, B: Matrix) -> None:
    if A.spec != B.spec:
        raise FieldMismatch(f"{A.spec} vs {B.spec}")
    if not (A.is_square and B.is_square and A.rows == B.rows):
        raise DimensionMismatch(f"need square matrices of equal size, got {A.shape} and {B.shape}")


def prove_two_sided(A: Matrix, B: Matrix) -> Certificate:
    """Certificate that ``B @ A == I`` given ``A @ B == I``.

    Raises NotLeftInverse when the hypothesis fails and InternalContradiction
    if any step the argument guarantees does not hold.
    """
    _same_square_pair(A, B)
    spec, n = A.spec, A.rows
    if n == 0:
        return Certificate(spec, 0, (), None)
    bad = _check_identity(mat_mul(A, B))
    if bad:
        raise NotLeftInverse(*bad)

    levels = []
    a, b = A, B
    for m in range(n, 0, -1):
        if m != n and _check_identity(mat_mul(a, b)):
            raise InternalContradiction(f"trailing pair at size {m} is not a one-sided inverse")
        try:
            ops, a_star = reduce_first_column(a)
        except ZeroFirstColumn:
            raise InternalContradiction(
                f"first column vanished at size {m} although A*B = I") from None
        b_star = b
        for op in ops:
            b_star = elem_apply_right(elem_inverse(op, spec), b_star)
        ap, bp = block_split(a_star), block_split(b_star)
        if ap.alpha != 1 or not ap.u.is_zero():
            raise InternalContradiction(f"reduction at size {m} did not reach e_1")
        if not bp.u.is_zero():
            raise InternalContradiction(f"h* is nonzero at size {m}")
        if bp.alpha != 1:
            raise InternalContradiction(f"beta* = {spec.format(bp.alpha)} at size {m}")
        if not vec_add(bp.v, row_times(ap.v, bp.tail)).is_zero():
            raise InternalContradiction(f"w* + v* B~* is nonzero at size {m}")
        levels.append(CertLevel(m, tuple(ops), ap.v, bp.alpha, bp.v, bp.u, bp.tail))
        if m == 1:
            base = (a[1, 1], b[1, 1])
        a, b = ap.tail, bp.tail

    bad = _check_identity(mat_mul(B, A))
    if bad:
        raise InternalContradiction(f"B*A differs from I at {bad[:2]}")
    return Certificate(spec, n, tuple(levels), base)


def verify_certificate(cert: Certificate, A: Matrix, B: Matrix) -> bool:
    """Replay ``cert`` against ``(A, B)`` using only products and row operations.

    Malformed size chains raise MalformedCertificate; every other mismatch
    returns False.
    """
    cert.check_shape()
    if not (A.spec == B.spec == cert.spec):
        return False
    if not (A.is_square and B.is_square and A.rows == B.rows == cert.n):
        return False
    spec = cert.spec
    if _check_identity(mat_mul(A, B)):
        return False

    a, b = A, B
    for lev in cert.levels:
        m = lev.n
        try:
            a_star = a
            for op in lev.ops:
                a_star = elem_apply_left(op, a_star)
            b_star = b
            for op in lev.ops:
                b_star = mat_mul(b_star, elem_to_matrix(elem_inverse(op, spec), m, spec))
        except (IndexError, ValueError, ZeroDivisionError):
            return False
        ap, bp = block_split(a_star), block_split(b_star)
        # A* must be [[1, v*^t], [0, A~*]]
        if ap.alpha != 1 or not ap.u.is_zero() or ap.v != lev.a_star_row:
            return False
        if (bp.alpha, bp.v, bp.u, bp.tail) != (lev.beta_star, lev.w_star, lev.h_star, lev.b_tail):
            return False
        if lev.beta_star != 1 or not lev.h_star.is_zero():
            return False
        if not vec_add(lev.w_star, row_times(lev.a_star_row, lev.b_tail)).is_zero():
            return False
        if m == 1:
            x, y = cert.base
            if (x, y) != (a[1, 1], b[1, 1]) or spec.mul(x, y) != 1:
                return False
        a, b = ap.tail, lev.b_tail

    return mat_mul(B, A).is_identity()


# --- JSON ---------------------------------------------------------------------

def certificate_to_dict(cert: Certificate) -> dict:
    spec = cert.spec
    fmt = spec.format
    levels = [
        {
            "ops": [format_op(op, spec) for op in lev.ops],
            "v_star": lev.a_star_row.literals(),
            "beta_star": fmt(lev.beta_star),
            "w_star": lev.w_star.literals(),
            "h_star": lev.h_star.literals(),
            "b_tail": lev.b_tail.literals(),
        }
        for lev in cert.levels
    ]
    base = "empty" if cert.base is None else [fmt(cert.base[0]), fmt(cert.base[1])]
    return {"field": spec.name, "n": cert.n, "levels": levels, "base": base}


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2) + "\n"


def certificate_from_dict(d: dict) -> Certificate:
    """Inverse of :func:`certificate_to_dict`; structural problems raise MalformedCertificate."""
    try:
        spec = FieldSpec.from_name(d["field"])
        n = d["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise MalformedCertificate("'n' must be an integer")
        levels = []
        for k, ld in enumerate(d["levels"]):
            m = n - k
            tail_rows = [[spec.parse(t) for t in row] for row in ld["b_tail"]]
            levels.append(CertLevel(
                n=m,
                ops=tuple(parse_op(s, spec) for s in ld["ops"]),
                a_star_row=Vector(spec, map(spec.parse, ld["v_star"]), canonical=True),
                beta_star=spec.parse(ld["beta_star"]),
                w_star=Vector(spec, map(spec.parse, ld["w_star"]), canonical=True),
                h_star=Vector(spec, map(spec.parse, ld["h_star"]), canonical=True),
                b_tail=Matrix(spec, tail_rows, max(m - 1, 0), canonical=True),
            ))
        raw_base = d["base"]
        if raw_base == "empty":
            base = None
        else:
            x, y = raw_base
            base = (spec.parse(x), spec.parse(y))
    except MalformedCertificate:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedCertificate(f"bad certificate: {exc}") from None
    cert = Certificate(spec, n, tuple(levels), base)
    cert.check_shape()
    return cert


def certificate_from_json(text: str) -> Certificate:
    """Parse certificate JSON; invalid JSON surfaces as json.JSONDecodeError."""
    return certificate_from_dict(json.loads(text))
