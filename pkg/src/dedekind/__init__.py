"""Exact linear algebra for certifying that one-sided matrix inverses are two-sided."""

from .certify import (
    Certificate,
    CertLevel,
    SingularReport,
    left_inverse,
    prove_two_sided,
    rank,
    reduce_first_column,
    solve_homogeneous,
    verify_certificate,
)
from .elementary import AddMultiple, Scale, Swap, elem_apply_left, elem_inverse, elem_to_matrix
from .field import FieldSpec, field_canonicalize, field_inv
from .matrix import BlockParts, Matrix, Vector, block_join, block_split, mat_apply, mat_mul

__all__ = [
    "AddMultiple", "BlockParts", "CertLevel", "Certificate", "FieldSpec", "Matrix",
    "Scale", "SingularReport", "Swap", "Vector", "block_join", "block_split",
    "elem_apply_left", "elem_inverse", "elem_to_matrix", "field_canonicalize", "field_inv",
    "left_inverse", "mat_apply", "mat_mul", "prove_two_sided", "rank",
    "reduce_first_column", "solve_homogeneous", "verify_certificate",
]
