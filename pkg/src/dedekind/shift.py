"""Shift operators on finitely supported sequences.

The space is spanned by ``e_1, e_2, ...``.  The right shift sends ``e_k`` to
``e_{k+1}``; the left shift sends ``e_k`` to ``e_{k-1}`` and kills ``e_1``.
Left-after-right is the identity, right-after-left is not, so the ring of
endomorphisms of this space has a one-sided inverse that is not two-sided.

All checks here are on finitely many basis vectors (plus linearity); they
exercise the construction, they do not prove anything about the whole space.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Mapping

from .field import FieldElement, FieldSpec


class FinSuppVector:
    """Immutable sparse vector; ``support`` maps index k >= 1 to a nonzero coefficient."""

    __slots__ = ("spec", "_items")

    def __init__(self, spec: FieldSpec, coeffs: Mapping[int, object] | None = None):
        items = {}
        for k, c in (coeffs or {}).items():
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"basis index must be an integer >= 1, got {k!r}")
            c = spec.canonicalize(c)
            if c != 0:
                items[k] = c
        self.spec = spec
        self._items = tuple(sorted(items.items()))

    @classmethod
    def basis(cls, spec: FieldSpec, k: int) -> FinSuppVector:
        return cls(spec, {k: spec.one})

    @classmethod
    def zero(cls, spec: FieldSpec) -> FinSuppVector:
        return cls(spec)

    @property
    def support(self) -> dict[int, FieldElement]:
        return dict(self._items)

    def coefficient(self, k: int) -> FieldElement:
        return dict(self._items).get(k, self.spec.zero)

    def is_zero(self) -> bool:
        return not self._items

    def _combine(self, other: FinSuppVector, sign: int) -> FinSuppVector:
        if other.spec != self.spec:
            raise ValueError("vectors over different fields")
        spec = self.spec
        out = dict(self._items)
        for k, c in other._items:
            c = c if sign > 0 else spec.neg(c)
            out[k] = spec.add(out.get(k, spec.zero), c)
        return FinSuppVector(spec, out)

    def __add__(self, other: FinSuppVector) -> FinSuppVector:
        return self._combine(other, 1)

    def __sub__(self, other: FinSuppVector) -> FinSuppVector:
        return self._combine(other, -1)

    def scale(self, c) -> FinSuppVector:
        c = self.spec.canonicalize(c)
        return FinSuppVector(self.spec, {k: self.spec.mul(c, x) for k, x in self._items})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinSuppVector):
            return NotImplemented
        return self.spec == other.spec and self._items == other._items

    def __hash__(self) -> int:
        return hash((self.spec, self._items))

    def __repr__(self) -> str:
        if not self._items:
            return "0"
        return " + ".join(f"{self.spec.format(c)}*e_{k}" for k, c in self._items)


class ShiftOp(enum.Enum):
    RIGHT = "right"  # e_k -> e_{k+1}
    LEFT = "left"  # e_1 -> 0, e_k -> e_{k-1}


def shift_apply(op: ShiftOp, v: FinSuppVector) -> FinSuppVector:
    if op is ShiftOp.RIGHT:
        moved = {k + 1: c for k, c in v.support.items()}
    else:
        moved = {k - 1: c for k, c in v.support.items() if k > 1}
    return FinSuppVector(v.spec, moved)


def ab(v: FinSuppVector) -> FinSuppVector:
    """Right shift after left shift."""
    return shift_apply(ShiftOp.RIGHT, shift_apply(ShiftOp.LEFT, v))


def ba(v: FinSuppVector) -> FinSuppVector:
    """Left shift after right shift."""
    return shift_apply(ShiftOp.LEFT, shift_apply(ShiftOp.RIGHT, v))


@dataclass(frozen=True)
class ShiftReport:
    spec: FieldSpec
    max_index: int
    ba_identity: bool
    ab_identity: bool
    ab_kills_e1: bool
    ab_fixes_rest: bool

    @property
    def passed(self) -> bool:
        return self.ba_identity and not self.ab_identity and self.ab_kills_e1 and self.ab_fixes_rest

    def to_dict(self) -> dict:
        return {
            "field": self.spec.name,
            "max_index": self.max_index,
            "ba_identity": self.ba_identity,
            "ab_identity": self.ab_identity,
            "witness": "e_1",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def dedekind_counterexample_report(spec: FieldSpec, max_index: int) -> ShiftReport:
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    gens = [FinSuppVector.basis(spec, k) for k in range(1, max_index + 1)]
    ba_ok = all(ba(e) == e for e in gens)
    ab_images = [ab(e) for e in gens]
    return ShiftReport(
        spec=spec,
        max_index=max_index,
        ba_identity=ba_ok,
        ab_identity=all(img == e for img, e in zip(ab_images, gens)),
        ab_kills_e1=ab_images[0].is_zero(),
        ab_fixes_rest=all(img == e for img, e in zip(ab_images[1:], gens[1:])),
    )
