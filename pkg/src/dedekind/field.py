"""Exact scalar arithmetic over GF(p) and the rationals.

Field elements are plain Python values: canonical residues ``0 <= r < p``
(``int``) for prime fields and reduced :class:`fractions.Fraction` objects for
the rationals.  A :class:`FieldSpec` carries the arithmetic; elements never
carry a reference to their field, which keeps dense matrices cheap.
"""

from __future__ import annotations

import enum
import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import DivisionByZero, NonPrimeModulus, ZeroDenominator

FieldElement = Union[int, Fraction]

_LITERAL = re.compile(r"-?[0-9]+(/[0-9]+)?\Z")


class FieldKind(enum.Enum):
    PRIME = "prime"
    RATIONAL = "rational"


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    """Trial division up to isqrt(n)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _egcd_inverse(a: int, p: int) -> int:
    # extended Euclid on (a, p); a is a nonzero residue
    old_r, r = a, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise DivisionByZero(f"{a} is not invertible modulo {p}")
    return old_s % p


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME:
            if not isinstance(self.modulus, int) or not is_prime(self.modulus):
                raise NonPrimeModulus(f"modulus {self.modulus!r} is not a prime >= 2")
        elif self.modulus is not None:
            raise ValueError("rational field takes no modulus")
        # hot-path cache: the modulus for GF(p), None for the rationals
        object.__setattr__(self, "_p", self.modulus if self.kind is FieldKind.PRIME else None)

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(FieldKind.PRIME, p)

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(FieldKind.RATIONAL)

    @classmethod
    def from_name(cls, name: str) -> FieldSpec:
        """Parse ``rational`` or ``gf<p>`` (the CLI/JSON field names)."""
        if name == "rational":
            return cls.rational()
        m = re.fullmatch(r"gf([0-9]+)", name)
        if not m:
            raise ValueError(f"unknown field {name!r}; expected 'rational' or 'gf<p>'")
        return cls.gf(int(m.group(1)))

    @property
    def is_prime_field(self) -> bool:
        return self._p is not None

    @property
    def name(self) -> str:
        return f"gf{self.modulus}" if self.is_prime_field else "rational"

    def __str__(self) -> str:
        return f"GF({self.modulus})" if self.is_prime_field else "Q"

    @property
    def zero(self) -> FieldElement:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> FieldElement:
        return 1 if self.is_prime_field else Fraction(1)

    def canonicalize(self, raw) -> FieldElement:
        """Canonical element for an int, Fraction, ``(num, den)`` pair or literal string."""
        if isinstance(raw, str):
            raw = parse_literal(raw)
        if isinstance(raw, tuple):
            num, den = raw
            if den == 0:
                raise ZeroDenominator(f"{num}/0")
            raw = Fraction(num, den)
        if isinstance(raw, bool) or not isinstance(raw, (int, Fraction)):
            raise TypeError(f"cannot interpret {raw!r} as a field element")
        if self.is_prime_field:
            p = self.modulus
            if isinstance(raw, Fraction):
                den = raw.denominator % p
                if den == 0:
                    raise DivisionByZero(f"denominator of {raw} vanishes modulo {p}")
                return raw.numerator * _egcd_inverse(den, p) % p
            return raw % p
        return Fraction(raw)

    def is_canonical(self, a) -> bool:
        if self.is_prime_field:
            return type(a) is int and 0 <= a < self.modulus
        return type(a) is Fraction

    # arithmetic; inputs are assumed canonical

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self._p
        return (a + b) % p if p else a + b

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self._p
        return (a - b) % p if p else a - b

    def neg(self, a: FieldElement) -> FieldElement:
        p = self._p
        return -a % p if p else -a

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self._p
        return a * b % p if p else a * b

    def inv(self, a: FieldElement) -> FieldElement:
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in {self}")
        if self.is_prime_field:
            return _egcd_inverse(a, self.modulus)
        return 1 / a

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def dot(self, xs: Iterable[FieldElement], ys: Iterable[FieldElement]) -> FieldElement:
        """Sum of products, reduced once at the end for prime fields."""
        p = self._p
        if p:
            return sum(map(operator.mul, xs, ys)) % p
        # Fraction arithmetic is slow even on zeros; elementary matrices are mostly zeros
        return sum((x * y for x, y in zip(xs, ys) if x and y), Fraction(0))

    def format(self, a: FieldElement) -> str:
        """Canonical text literal: a residue, ``a`` or ``a/b``."""
        if self.is_prime_field:
            return str(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse(self, text: str) -> FieldElement:
        return self.canonicalize(parse_literal(text))


def parse_literal(text: str) -> int | Fraction:
    """Parse an integer or ``num/den`` literal without reducing into a field."""
    if not _LITERAL.match(text):
        raise ValueError(f"bad literal {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ZeroDenominator(f"{text}: zero denominator")
        return Fraction(int(num), int(den))
    return int(text)


def field_canonicalize(spec: FieldSpec, raw) -> FieldElement:
    # re-validate: a spec built with object.__new__ skips __post_init__
    if spec.kind is FieldKind.PRIME and not is_prime(spec.modulus or 0):
        raise NonPrimeModulus(f"modulus {spec.modulus!r} is not prime")
    return spec.canonicalize(raw)


def field_inv(spec: FieldSpec, a: FieldElement) -> FieldElement:
    return spec.inv(a)
