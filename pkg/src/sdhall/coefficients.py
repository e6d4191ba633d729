"""Exact arithmetic in the quadratic field Q(sqrt(q)).

Every structure constant of the (twisted) Hall algebras built here is a
rational multiple of a power of ``v = q**(1/2)``, so a pair of rationals
``rat + surd*sqrt(q)`` is enough to hold all of them exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class ContextError(ValueError):
    """Raised when two coefficients live in different fields Q(sqrt(q))."""


def _is_square(n: int) -> bool:
    r = math.isqrt(n)
    return r * r == n


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class QSqrt:
    """An element ``rat + surd*sqrt(q)`` of Q(sqrt(q)).

    Values are immutable. When ``q`` is a perfect square the surd part is
    folded into the rational part, so equal numbers have equal fields.
    """

    __slots__ = ("rat", "surd", "q", "_hash")

    def __init__(self, rat=0, surd=0, q: int = 1):
        if q < 1:
            raise ValueError("q must be a positive integer")
        rat = _rat(rat)
        surd = _rat(surd)
        if surd and _is_square(q):
            rat += surd * math.isqrt(q)
            surd = Fraction(0)
        self.rat = rat
        self.surd = surd
        self.q = q
        self._hash = None

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, q: int) -> QSqrt:
        return cls(0, 0, q)

    @classmethod
    def one(cls, q: int) -> QSqrt:
        return cls(1, 0, q)

    @classmethod
    def scaled_vpow(cls, c, n: int, q: int) -> QSqrt:
        """``c * v**n`` for rational ``c``."""
        c = _rat(c)
        if not c:
            return cls(0, 0, q)
        base, odd = _vpow_parts(n, q)
        if odd:
            return cls(0, c * base, q)
        return cls(c * base, 0, q)

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> QSqrt:
        if isinstance(other, QSqrt):
            if other.q != self.q:
                raise ContextError(f"mismatched fields: q={self.q} vs q={other.q}")
            return other
        if isinstance(other, (int, Fraction)):
            return QSqrt(other, 0, self.q)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QSqrt(self.rat + o.rat, self.surd + o.surd, self.q)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt(-self.rat, -self.surd, self.q)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QSqrt(self.rat - o.rat, self.surd - o.surd, self.q)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.rat, self.surd, o.rat, o.surd
        return QSqrt(a * c + b * d * self.q, a * d + b * c, self.q)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.rat * self.rat - self.surd * self.surd * self.q

    def conjugate(self) -> QSqrt:
        return QSqrt(self.rat, -self.surd, self.q)

    def inv(self) -> QSqrt:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(q))")
        n = self.norm()
        return QSqrt(self.rat / n, -self.surd / n, self.q)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = QSqrt.one(self.q)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparisons / hashing ------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.surd)

    def __eq__(self, other) -> bool:
        if isinstance(other, QSqrt):
            return self.q == other.q and self.rat == other.rat and self.surd == other.surd
        if isinstance(other, (int, Fraction)):
            return not self.surd and self.rat == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rat) if not self.surd else hash((self.rat, self.surd, self.q))
        return self._hash

    def is_rational(self) -> bool:
        return not self.surd

    def __float__(self) -> float:
        return float(self.rat) + float(self.surd) * math.sqrt(self.q)

    def __repr__(self) -> str:
        return f"QSqrt({self.rat}, {self.surd}, q={self.q})"

    def __str__(self) -> str:
        if not self.surd:
            return str(self.rat)
        s = f"{self.surd}*sqrt({self.q})"
        if not self.rat:
            return s
        return f"{self.rat}{'+' if self.surd > 0 else ''}{s}"

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {"rat": str(self.rat), "surd": str(self.surd)}

    @classmethod
    def from_json(cls, data: dict, q: int) -> QSqrt:
        return cls(Fraction(data["rat"]), Fraction(data["surd"]), q)


@lru_cache(maxsize=None)
def _vpow_parts(n: int, q: int) -> tuple[Fraction, bool]:
    # v**n = base * sqrt(q)**odd
    half, odd = divmod(n, 2)
    return Fraction(q) ** half, bool(odd)


def vpow(n: int, q: int) -> QSqrt:
    """Return ``v**n`` exactly, where ``v = q**(1/2)``."""
    return QSqrt.scaled_vpow(1, n, q)


def add(x: QSqrt, y: QSqrt) -> QSqrt:
    return x + y


def mul(x: QSqrt, y: QSqrt) -> QSqrt:
    return x * y


def inv(x: QSqrt) -> QSqrt:
    return x.inv()


class Laurent:
    """Accumulator for sums of ``c * v**n`` with rational ``c``.

    Inner loops add thousands of such terms; keeping them grouped by
    exponent and converting once is much cheaper than repeated QSqrt
    multiplication.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        self.terms = dict(terms) if terms else {}

    def add(self, c, n: int) -> None:
        if c:
            t = self.terms
            t[n] = t.get(n, 0) + c

    def iadd(self, other: Laurent, c=1, shift: int = 0) -> None:
        for n, x in other.terms.items():
            self.add(x * c, n + shift)

    def value(self, q: int) -> QSqrt:
        rat = Fraction(0)
        surd = Fraction(0)
        for n, c in self.terms.items():
            if not c:
                continue
            base, odd = _vpow_parts(n, q)
            if odd:
                surd += c * base
            else:
                rat += c * base
        return QSqrt(rat, surd, q)

    def __bool__(self) -> bool:
        return any(self.terms.values())
