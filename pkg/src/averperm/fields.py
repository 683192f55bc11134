"""Ground fields: exact rationals and small prime fields.

Scalars are plain values -- ``fractions.Fraction`` over the rationals,
``FpElement`` over a prime field -- supporting ``+ - * / == hash bool``.
A ``Field`` object supplies the constants, coercions and the string
round-trip used by the file formats.  All arithmetic is exact; there are
no epsilon comparisons anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


class FpElement:
    """Residue in a prime field.  Immutable and hashable."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v % p)

    def __setattr__(self, *a):
        raise AttributeError("FpElement is immutable")

    def __reduce__(self):
        return (FpElement, (self.p, self.v))

    def _check(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        return o if o is NotImplemented else FpElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return o if o is NotImplemented else FpElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._check(other)
        return o if o is NotImplemented else FpElement(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._check(other)
        return o if o is NotImplemented else FpElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        if o.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(self.p, self.v * pow(o.v, -1, self.p))

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "FpElement(%d, %d)" % (self.p, self.v)

    def __str__(self):
        return str(self.v)


class Field:
    """Common interface; see Rationals and PrimeField."""

    name: str

    def coerce(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        """Parse a scalar literal "p" or "p/q" (decimal integers)."""
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
        else:
            num, den = text, "1"
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ParseError("bad scalar literal %r" % text) from None
        if d == 0:
            raise ParseError("zero denominator in %r" % text)
        return self.coerce(Fraction(n, d))

    def to_str(self, x) -> str:
        return str(x)


class Rationals(Field):
    name = "q"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError("cannot coerce %r into Q" % (value,))

    def grid(self, lo: int = -2, hi: int = 2):
        """The integer search grid used by the exhaustive oracle."""
        return tuple(Fraction(n) for n in range(lo, hi + 1))

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValueError("p must be prime")
        self.p = p
        self.name = "f%d" % p
        self.zero = FpElement(p, 0)
        self.one = FpElement(p, 1)

    def from_int(self, n: int) -> FpElement:
        return FpElement(self.p, n)

    def coerce(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ValueError("mixed prime fields")
            return value
        if isinstance(value, int):
            return FpElement(self.p, value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("denominator not invertible mod %d" % self.p)
            return self.from_int(value.numerator) / self.from_int(value.denominator)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError("cannot coerce %r into F_%d" % (value, self.p))

    def grid(self, lo: int = 0, hi: int = None):
        return tuple(FpElement(self.p, v) for v in range(self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()
GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)

FIELDS = {"q": QQ, "f2": GF2, "f3": GF3, "f5": GF5}
