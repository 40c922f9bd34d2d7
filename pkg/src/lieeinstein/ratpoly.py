"""Exact univariate polynomials and rational functions over Q.

Coefficients are stored as :class:`fractions.Fraction`, constant term first.
Evaluation uses Horner's scheme and only needs ``+`` and ``*`` on the
argument, so a :class:`Poly` can be evaluated at a Fraction, at an
:class:`~lieeinstein.interval.Interval`, or at another Poly/RationalFunction.

Real roots are isolated with Sturm sequences and refined by bisection at
dyadic midpoints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Dense univariate polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @classmethod
    def from_descending(cls, coeffs: Sequence) -> "Poly":
        """Build from coefficients listed leading term first."""
        return cls(reversed(list(coeffs)))

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                s = ("-" if c < 0 else "+") + mono
            else:
                s = ("-" if c < 0 else "+") + str(abs(c)) + ("*" + mono if mono else "")
            terms.append(s)
        out = "".join(terms)
        return "Poly(" + (out[1:] if out.startswith("+") else out) + ")"

    # -- ring operations --------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly(c / other for c in self.coeffs)
        if isinstance(other, Poly):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(o, self)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quo), Poly(rem[: other.degree])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    # -- calculus and normalisation --------------------------------------
    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.lc

    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if not self.coeffs:
            return Fraction(0)
        den = lcm(*(c.denominator for c in self.coeffs))
        num = 0
        for c in self.coeffs:
            num = gcd(num, c.numerator * (den // c.denominator))
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integer coefficients, gcd 1, positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return self / c

    def int_coeffs(self) -> list[int]:
        """Coefficients of :meth:`primitive` as Python ints, constant first."""
        return [int(c) for c in self.primitive().coeffs]

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a % b
            if b:
                # keep coefficient sizes in check between steps
                b = b.primitive()
        return a.monic()

    def squarefree_part(self) -> "Poly":
        if self.degree < 1:
            return self
        g = self.gcd(self.derivative())
        return self // g if g.degree > 0 else self

    def is_proportional(self, other: "Poly") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.primitive() == other.primitive()

    # -- evaluation -------------------------------------------------------
    def __call__(self, x):
        if not self.coeffs:
            return Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        if self.degree == 0 and not isinstance(x, (int, Fraction)):
            return x * 0 + self.coeffs[0]
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def eval(self, x):
        return self(x)

    def compose(self, other):
        """``self(other)`` for a Poly or RationalFunction ``other``."""
        if isinstance(other, RationalFunction):
            # homogenise to avoid repeated gcd work: sum c_i n^i d^(deg-i) / d^deg
            n, d = other.num, other.den
            deg = self.degree
            if deg < 0:
                return RationalFunction(Poly())
            total = Poly()
            npow = [Poly((1,))]
            dpow = [Poly((1,))]
            for _ in range(deg):
                npow.append(npow[-1] * n)
                dpow.append(dpow[-1] * d)
            for i, c in enumerate(self.coeffs):
                if c:
                    total = total + npow[i] * dpow[deg - i] * c
            return RationalFunction(total, dpow[deg])
        return self(other)

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def cauchy_bound(self) -> Fraction:
        """Every real root has absolute value strictly below this bound."""
        if self.degree < 1:
            return Fraction(1)
        lc = abs(self.lc)
        return 1 + max(abs(c) for c in self.coeffs[:-1]) / lc


class RationalFunction:
    """Quotient of two polynomials, kept in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduce: bool = True):
        num = Poly._coerce(num) if not isinstance(num, Poly) else num
        if den is None:
            den = Poly((1,))
        elif not isinstance(den, Poly):
            den = Poly._coerce(den)
        if num is None or den is None:
            raise TypeError("RationalFunction needs polynomial or rational parts")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            if num.is_zero():
                den = Poly((1,))
            elif den.degree > 0:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lead = den.lc
            if lead != 1:
                num, den = num / lead, den / lead
        self.num: Poly = num
        self.den: Poly = den

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Poly.x())

    def __repr__(self) -> str:
        if self.den == Poly((1,)):
            return f"RationalFunction({self.num!r})"
        return f"RationalFunction({self.num!r} / {self.den!r})"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @staticmethod
    def _coerce(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Poly.const(other))
        return None

    def __eq__(self, other) -> bool:
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunction(Poly())
            return RationalFunction(self.num * other, self.den, reduce=False)
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        # cross-cancel first so the products stay small
        g1 = self.num.gcd(o.den) if self.num and o.den.degree > 0 else Poly((1,))
        g2 = o.num.gcd(self.den) if o.num and self.den.degree > 0 else Poly((1,))
        n1 = self.num // g1 if g1.degree > 0 else self.num
        d2 = o.den // g1 if g1.degree > 0 else o.den
        n2 = o.num // g2 if g2.degree > 0 else o.num
        d1 = self.den // g2 if g2.degree > 0 else self.den
        return RationalFunction(n1 * n2, d1 * d2, reduce=False)._normalise()

    __rmul__ = __mul__

    def _normalise(self) -> "RationalFunction":
        if self.num.is_zero():
            return RationalFunction(Poly())
        lead = self.den.lc
        if lead != 1:
            return RationalFunction(self.num / lead, self.den / lead, reduce=False)
        return self

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num, reduce=False)._normalise()

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RationalFunction(self.num / other, self.den, reduce=False)
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, reduce=False)._normalise()

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def eval(self, x):
        return self(x)

    def compose(self, other):
        return self.num.compose(other) / self.den.compose(other)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )


X = RationalFunction.x()


# -- real root isolation --------------------------------------------------

def sturm_sequence(p: Poly) -> list[Poly]:
    """Signed remainder sequence p, p', -rem(p, p'), ... for squarefree ``p``.

    Each remainder is rescaled by a positive constant, which leaves sign
    variation counts unchanged.
    """
    if p.degree < 1:
        return [p]
    seq = [p, p.derivative()]
    while True:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        c = r.content()
        seq.append(-(r / c))
    return seq


def _variations(signs: Iterable[int]) -> int:
    count, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def sign_variations(seq: Sequence[Poly], x: Fraction | None, side: int = 0) -> int:
    """Sign variations of ``seq`` at ``x``; ``x=None`` means side * infinity."""
    if x is None:
        signs = []
        for q in seq:
            s = 1 if q.lc > 0 else -1
            if side < 0 and q.degree % 2:
                s = -s
            signs.append(s)
        return _variations(signs)
    return _variations(q.sign_at(x) for q in seq)


def count_roots(p: Poly, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (lo, hi].

    ``None`` bounds stand for -inf / +inf.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    q = p.squarefree_part()
    if q.degree < 1:
        return 0
    seq = sturm_sequence(q)
    return sign_variations(seq, lo, -1) - sign_variations(seq, hi, +1)


@dataclass(frozen=True)
class IsolatedRoot:
    """A real root of ``poly`` known to lie in [lo, hi].

    ``lo == hi`` marks an exactly known rational root.  Otherwise ``poly``
    is squarefree, ``poly(lo) * poly(hi) < 0`` and no other root lies in
    the closed interval.
    """

    lo: Fraction
    hi: Fraction
    poly: Poly

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)

    def interval(self):
        from .interval import Interval

        return Interval(self.lo, self.hi)


def _dyadic_between(lo: Fraction, hi: Fraction) -> Fraction:
    """A short dyadic rational strictly inside (lo, hi), near the midpoint."""
    w = hi - lo
    k = 0
    scale = Fraction(1)
    while scale > w / 4:
        scale /= 2
        k += 1
    while scale * 8 < w:
        scale *= 2
    mid = (lo + hi) / 2
    cand = Fraction(round(mid / scale)) * scale
    if lo < cand < hi:
        return cand
    return mid


def isolate_real_roots(p: Poly, lo: Fraction | None = None, hi: Fraction | None = None) -> list[IsolatedRoot]:
    """Isolate every distinct real root of ``p`` in the open interval (lo, hi).

    Roots are returned in increasing order.  Rational roots met exactly at a
    bisection point are returned as degenerate intervals.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    q = p.squarefree_part().primitive()
    if q.degree < 1:
        return []
    bound = q.cauchy_bound()
    a = -bound if lo is None else _frac(lo)
    b = bound if hi is None else _frac(hi)
    if a >= b:
        return []
    seq = sturm_sequence(q)

    out: list[IsolatedRoot] = []
    # (lo, hi) open; variations evaluated at endpoints that are not roots
    a_in = q(a) == 0
    b_in = q(b) == 0
    if a_in:
        a = _nudge_inward(q, seq, a, b, upward=True)
    if b_in:
        b = _nudge_inward(q, seq, a, b, upward=False)
    stack = [(a, b, sign_variations(seq, a), sign_variations(seq, b))]
    while stack:
        l, h, vl, vh = stack.pop()
        n = vl - vh
        if n == 0:
            continue
        if n == 1 and q.sign_at(l) * q.sign_at(h) < 0:
            out.append(IsolatedRoot(l, h, q))
            continue
        m = _dyadic_between(l, h)
        vm = sign_variations(seq, m)
        if q(m) == 0:
            out.append(IsolatedRoot(m, m, q))
            # step off the root on both sides so subintervals stay root-free at ends
            eps = (h - l) / 1024
            m_lo, m_hi = m - eps, m + eps
            while count_in(seq, m_lo, m) != 1 or q(m_lo) == 0:
                eps /= 2
                m_lo = m - eps
            eps2 = (h - l) / 1024
            m_hi = m + eps2
            while count_in(seq, m, m_hi) != 0 or q(m_hi) == 0:
                eps2 /= 2
                m_hi = m + eps2
            stack.append((l, m_lo, vl, sign_variations(seq, m_lo)))
            stack.append((m_hi, h, sign_variations(seq, m_hi), vh))
            continue
        stack.append((l, m, vl, vm))
        stack.append((m, h, vm, vh))
    out.sort(key=lambda r: r.lo)
    return out


def count_in(seq: Sequence[Poly], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in (lo, hi] from a precomputed Sturm sequence."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def _nudge_inward(q: Poly, seq, a: Fraction, b: Fraction, upward: bool) -> Fraction:
    step = (b - a) / 2
    while True:
        c = a + step if upward else b - step
        lo_, hi_ = (a, c) if upward else (c, b)
        if q(c) != 0 and count_in(seq, lo_, hi_) == (0 if upward else 1):
            return c
        step /= 2


def positive_roots(p: Poly) -> list[IsolatedRoot]:
    """Isolate all roots in (0, inf)."""
    q = p.squarefree_part()
    if q.degree < 1:
        return []
    return isolate_real_roots(q, Fraction(0), q.cauchy_bound())


def refine(root: IsolatedRoot, width: Fraction) -> IsolatedRoot:
    """Bisect until ``hi - lo <= width``; exact roots are returned unchanged."""
    width = _frac(width)
    if root.exact or root.width <= width:
        return root
    q = root.poly
    lo, hi = root.lo, root.hi
    s_lo = q.sign_at(lo)
    while hi - lo > width:
        m = _dyadic_between(lo, hi)
        s = q.sign_at(m)
        if s == 0:
            return IsolatedRoot(m, m, q)
        if s == s_lo:
            lo = m
        else:
            hi = m
    return IsolatedRoot(lo, hi, q)


def try_rational(root: IsolatedRoot, max_den: int = 10**6) -> IsolatedRoot:
    """Replace ``root`` by an exact rational if a small-denominator candidate is a root."""
    if root.exact:
        return root
    cand = root.mid.limit_denominator(max_den)
    if root.lo <= cand <= root.hi and root.poly(cand) == 0:
        return IsolatedRoot(cand, cand, root.poly)
    return root
