"""Exact scalar arithmetic over Q and over prime fields F_p.

Scalars are plain Python values: ``fractions.Fraction`` over Q and
``int`` residues in ``[0, p)`` over F_p.  Both support ``+``, ``-`` and
``*`` natively, so bulk arithmetic can use the native operators and call
:meth:`Field.normalize` at container boundaries (a no-op over Q, a
reduction mod p over F_p).  Division and inversion go through the field
object.

Serialized form: ``"p/q"`` in lowest terms with the denominator omitted
when it is 1 (Q), decimal residue strings (F_p).
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import FieldMismatchError

Scalar = object  # Fraction over Q, int over F_p


class Field:
    """Base class for the two supported exact fields."""

    tag: str
    char: int

    def normalize(self, x) -> Scalar:
        raise NotImplementedError

    def inv(self, x) -> Scalar:
        raise NotImplementedError

    def div(self, a, b) -> Scalar:
        return self.normalize(a * self.inv(b))

    def from_int(self, n: int) -> Scalar:
        return self.normalize(n)

    def parse(self, s: str) -> Scalar:
        raise NotImplementedError

    def fmt(self, x) -> str:
        return str(x)

    def __repr__(self) -> str:
        return self.tag

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self) -> int:
        return hash(self.tag)


class RationalField(Field):
    tag = "q"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, x) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, x) -> Fraction:
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / self.normalize(x)

    def div(self, a, b) -> Fraction:
        if not b:
            raise ZeroDivisionError("division by zero")
        return self.normalize(a) / b

    def parse(self, s: str) -> Fraction:
        return Fraction(s.strip())


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.tag = f"fp:{p}"
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def normalize(self, x) -> int:
        return int(x) % self.p

    def inv(self, x) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def div(self, a, b) -> int:
        return a * self.inv(b) % self.p

    def parse(self, s: str) -> int:
        return int(s.strip()) % self.p


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    tag = tag.strip().lower()
    if tag == "q":
        return QQ
    if tag.startswith("fp:"):
        return GF(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r} (expected 'q' or 'fp:<p>')")


def require_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a.tag} vs {b.tag}")
