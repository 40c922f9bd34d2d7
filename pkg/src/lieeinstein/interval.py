"""Closed intervals with exact rational endpoints.

No rounding is involved, so every operation encloses the exact image set.
Used to carry an isolated root through back-substitution and to bound
Ricci residuals rigorously.
"""
from __future__ import annotations

from fractions import Fraction


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = lo if isinstance(lo, Fraction) else Fraction(lo)
        hi = lo if hi is None else (hi if isinstance(hi, Fraction) else Fraction(hi))
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    def __repr__(self) -> str:
        if self.lo == self.hi:
            return f"Interval({self.lo})"
        return f"Interval({float(self.lo):.15g}, {float(self.hi):.15g})"

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def mag(self) -> Fraction:
        """Upper bound of |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> Fraction:
        """Lower bound of |x| over the interval."""
        if self.contains_zero():
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def __float__(self) -> float:
        return float(self.mid)

    def __eq__(self, other) -> bool:
        if isinstance(other, Interval):
            return self.lo == other.lo and self.hi == other.hi
        if isinstance(other, (int, Fraction)):
            return self.lo == other == self.hi
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    @staticmethod
    def _coerce(other) -> "Interval | None":
        if isinstance(other, Interval):
            return other
        if isinstance(other, (int, Fraction)):
            return Interval(other)
        return None

    def __add__(self, other):
        o = Interval._coerce(other)
        if o is None:
            return NotImplemented
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = Interval._coerce(other)
        if o is None:
            return NotImplemented
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        o = Interval._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            a, b = self.lo * other, self.hi * other
            return Interval(a, b) if a <= b else Interval(b, a)
        o = Interval._coerce(other)
        if o is None:
            return NotImplemented
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.contains_zero():
            raise ZeroDivisionError(f"interval {self!r} contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = Interval._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = Interval._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, k: int) -> "Interval":
        if k < 0:
            return self.reciprocal() ** (-k)
        if k == 0:
            return Interval(1)
        if k % 2 == 1 or self.lo >= 0:
            return Interval(self.lo ** k, self.hi ** k)
        if self.hi <= 0:
            return Interval(self.hi ** k, self.lo ** k)
        return Interval(0, max(self.lo ** k, self.hi ** k))

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


def as_interval(x) -> Interval:
    return x if isinstance(x, Interval) else Interval(x)
