"""Exact base fields: arbitrary-precision rationals and prime fields.

Rational scalars are plain ``fractions.Fraction`` values (already canonical,
already a field).  Prime-field scalars are tiny wrapper objects around a
residue so they support the same operator set.  Every scalar is immutable
and compares by value.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

_MINUS_VARIANTS = str.maketrans({"−": "-", "–": "-"})


class RationalField:
    """The field of rationals; elements are ``Fraction``."""

    name = "Q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        text = str(text).strip().translate(_MINUS_VARIANTS)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}: {exc}") from None

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeFieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise TypeError(f"mixed prime fields F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return PrimeFieldElement(self.value * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return PrimeFieldElement(v * pow(self.value, self.p - 2, self.p), self.p)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return str(self.value)


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field with a prime number of elements."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F_{p}"

    @property
    def zero(self):
        return PrimeFieldElement(0, self.p)

    @property
    def one(self):
        return PrimeFieldElement(1, self.p)

    def from_int(self, n):
        return PrimeFieldElement(n, self.p)

    def parse(self, text):
        text = str(text).strip().translate(_MINUS_VARIANTS)
        try:
            num, _, den = text.partition("/")
            numerator = self.from_int(int(num))
            if not den:
                return numerator
            return numerator / self.from_int(int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad F_{self.p} literal {text!r}: {exc}") from None

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def GF(p):
    return PrimeField(p)


def parse_field(token):
    """Field from a CLI/scenario token: ``q`` or ``fp:<p>``."""
    token = str(token).strip().lower()
    if token in ("q", "qq", "rationals"):
        return QQ
    if token.startswith("fp:"):
        try:
            return GF(int(token[3:]))
        except ValueError as exc:
            raise ParseError(f"bad field token {token!r}: {exc}") from None
    raise ParseError(f"unknown field token {token!r} (expected 'q' or 'fp:<p>')")
