"""Exact arithmetic over prime fields GF(p) and the rationals.

Field elements travel through the library as raw payloads: an ``int`` in
``[0, p)`` for a prime field, a :class:`fractions.Fraction` for the
rationals.  :class:`FieldSpec` carries the operations on payloads, and
:class:`FieldValue` wraps a payload together with its field for callers who
want operator syntax.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Payload = Union[int, Fraction]

PRIME_FIELD = "prime_field"
RATIONALS = "rationals"

_TOKEN = re.compile(r"^gf(\d+)$")


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field (``kind="prime_field"``, prime ``p``) or the rationals."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PRIME_FIELD:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise FieldError(f"GF(p) needs a prime p, got {self.p!r}")
        elif self.kind == RATIONALS:
            if self.p is not None:
                raise FieldError("the rationals take no modulus")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(PRIME_FIELD, p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def parse(cls, token: str) -> "FieldSpec":
        """Parse a lowercase token: ``"gf2"``, ``"gf7"``, ``"rational"``."""
        if token == "rational":
            return cls.rationals()
        match = _TOKEN.match(token)
        if match is None:
            raise FieldError(f"unrecognized field token {token!r}")
        return cls.gf(int(match.group(1)))

    @property
    def token(self) -> str:
        return "rational" if self.p is None else f"gf{self.p}"

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    # -- payload arithmetic -------------------------------------------------

    def embed(self, a: int) -> Payload:
        if self.p is None:
            return Fraction(a)
        return a % self.p

    @property
    def zero(self) -> Payload:
        return self.embed(0)

    @property
    def one(self) -> Payload:
        return self.embed(1)

    def add(self, a: Payload, b: Payload) -> Payload:
        if self.p is None:
            return a + b
        return (a + b) % self.p

    def sub(self, a: Payload, b: Payload) -> Payload:
        if self.p is None:
            return a - b
        return (a - b) % self.p

    def neg(self, a: Payload) -> Payload:
        if self.p is None:
            return -a
        return -a % self.p

    def mul(self, a: Payload, b: Payload) -> Payload:
        if self.p is None:
            return a * b
        return a * b % self.p

    def inv(self, a: Payload) -> Payload:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def signed(self, a: Payload) -> int | Fraction:
        """Representative in ``(-p/2, p/2]`` for GF(p); identity on Q."""
        if self.p is None:
            return a
        return a - self.p if a > self.p // 2 else a

    def format(self, a: Payload) -> str:
        if self.p is None:
            return f"{a.numerator}/{a.denominator}"
        return str(a)

    def parse_value(self, text: str) -> Payload:
        if self.p is None:
            return Fraction(text)
        if "/" in text:
            num, den = text.split("/")
            return self.mul(self.embed(int(num)), self.inv(self.embed(int(den))))
        return self.embed(int(text))


GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)
GF5 = FieldSpec.gf(5)
GF7 = FieldSpec.gf(7)
QQ = FieldSpec.rationals()

TEST_FIELDS = (GF2, GF3, GF5, GF7, QQ)


@dataclass(frozen=True)
class FieldValue:
    spec: FieldSpec
    payload: Payload

    def _coerce(self, other) -> Payload:
        if isinstance(other, FieldValue):
            if other.spec != self.spec:
                raise FieldError(f"cannot mix {self.spec} and {other.spec}")
            return other.payload
        if isinstance(other, int):
            return self.spec.embed(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldValue(self.spec, self.spec.add(self.payload, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldValue(self.spec, self.spec.sub(self.payload, b))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldValue(self.spec, self.spec.mul(self.payload, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldValue(self.spec, self.spec.neg(self.payload))

    def __eq__(self, other):
        if isinstance(other, FieldValue):
            return self.spec == other.spec and self.payload == other.payload
        if isinstance(other, int):
            return self.payload == self.spec.embed(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.payload))

    def __bool__(self):
        return self.payload != 0

    def __str__(self):
        return self.spec.format(self.payload)

    def inverse(self) -> "FieldValue":
        return invert(self)


def canonical(spec: FieldSpec, integer: int) -> FieldValue:
    """Image of ``integer`` in the field."""
    return FieldValue(spec, spec.embed(integer))


def invert(x: FieldValue) -> FieldValue:
    return FieldValue(x.spec, x.spec.inv(x.payload))
