"""Exact ground fields: the rationals and prime fields F_p.

Every scalar in the system is exact — a ``fractions.Fraction`` over Q or a
canonical integer representative in ``range(p)`` over F_p.  No floating point
arithmetic is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class Field:
    """Common interface of the two exact field kinds."""

    kind: str
    characteristic: int

    def __call__(self, value):
        raise NotImplementedError

    def parse(self, text):
        """Parse an exact scalar from a string like ``"3"`` or ``"3/7"``."""
        raise NotImplementedError

    def to_str(self, value) -> str:
        raise NotImplementedError

    def inv(self, value):
        raise NotImplementedError

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash((self.kind, self.characteristic))

    def __repr__(self):
        if self.kind == "rationals":
            return "QQ"
        return f"GF({self.characteristic})"


class RationalField(Field):
    """The field Q with arbitrary-precision Fraction arithmetic."""

    kind = "rationals"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        return Fraction(value)

    def parse(self, text):
        return Fraction(str(text))

    def to_str(self, value) -> str:
        return str(Fraction(value))

    def inv(self, value):
        value = Fraction(value)
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / value


class PrimeField(Field):
    """The prime field F_p with canonical representatives 0..p-1."""

    kind = "prime-field"

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def __call__(self, value):
        if isinstance(value, Fraction):
            if value.denominator % self.characteristic == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return (
                value.numerator * pow(value.denominator, -1, self.characteristic)
            ) % self.characteristic
        return int(value) % self.characteristic

    def parse(self, text):
        text = str(text)
        if "/" in text:
            num, den = text.split("/")
            return self(Fraction(int(num), int(den)))
        return int(text) % self.characteristic

    def to_str(self, value) -> str:
        return str(int(value) % self.characteristic)

    def inv(self, value):
        value = int(value) % self.characteristic
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(value, -1, self.characteristic)


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (cached) prime field with p elements."""
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_from_spec(kind: str, p: int = 0) -> Field:
    """Build a field from a (kind, characteristic) descriptor."""
    if kind in ("rationals", "Q", "QQ"):
        return QQ
    if kind in ("prime-field", "GF", "Fp"):
        return GF(p)
    raise ValueError(f"unknown field kind {kind!r}")
