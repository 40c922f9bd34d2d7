"""Ricci components of left-invariant metrics on G and of invariant metrics on G/H.

Every function here is written against the field operations only, so the
metric scalars may be ``Fraction``, ``RationalFunction`` (to get identities
in x2) or ``Interval`` (to bound residuals at an isolated root).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .brackets import BracketTable
from .flagdecomp import Decomposition

ONE = Fraction(1)


class ZeroParameter(ValueError):
    pass


@dataclass(frozen=True)
class MetricParams:
    """Multipliers of B on (h0, h1, h2, m1, m2).

    Blocks missing from a decomposition are simply ignored, so an Ib metric
    can leave ``u2`` at its default.
    """

    u0: Any
    u1: Any = ONE
    u2: Any = ONE
    x1: Any = ONE
    x2: Any = ONE

    def y(self, k: int):
        return (self.u0, self.u1, self.u2, self.x1, self.x2)[k]

    def as_tuple(self) -> tuple:
        return (self.u0, self.u1, self.u2, self.x1, self.x2)

    def scaled(self, lam) -> "MetricParams":
        return MetricParams(*(lam * v for v in self.as_tuple()))


@dataclass(frozen=True)
class QuotientMetricParams:
    w1: Any
    w2: Any


RicciComponents = dict  # block index -> value


def _check(values: Sequence, blocks: Sequence[int]) -> None:
    for k in blocks:
        v = values[k]
        if isinstance(v, (int, Fraction)) and v == 0:
            raise ZeroParameter(f"metric parameter for block {k} is zero")


def ricci_general(t: BracketTable, dims: Decomposition, m: MetricParams) -> RicciComponents:
    """Ricci components from the structure-constant sums, for every block present."""
    blocks = t.blocks
    y = m.as_tuple()
    _check(y, blocks)
    r = {}
    for k in blocks:
        dk = t.block_dim(k)
        a = 0
        b = 0
        for i in blocks:
            for j in blocks:
                c = t(k, i, j)
                if c:
                    a = a + c * y[k] / (y[j] * y[i])
                c = t(j, k, i)
                if c:
                    b = b + c * y[j] / (y[k] * y[i])
        r[k] = 1 / (2 * y[k]) + a / (4 * dk) - b / (2 * dk)
    return r


def _closed_form_ricci(d1, d2, d3, d4, m: MetricParams, with_h1: bool, with_h2: bool) -> RicciComponents:
    u0, u1, u2, x1, x2 = m.as_tuple()
    D = Fraction(d3 + 4 * d4)
    K = d3 + 2 * d4 - 2 * d1 - 2
    r = {}
    r[0] = u0 * d3 / (4 * x1**2 * D) + u0 * d4 / (x2**2 * D)
    if with_h1:
        r[1] = (
            d4 * (2 * d1 + 2 - d4) / (2 * d1 * u1 * D)
            + u1 * d3 / (4 * x1**2 * D)
            + u1 * d4 * (d4 - 2) / (2 * d1 * x2**2 * D)
        )
    if with_h2:
        r[2] = (d2 - d3 * K / (2 * D)) / (4 * d2 * u2) + u2 * d3 * K / (8 * d2 * x1**2 * D)
    tail = u0 / D
    if with_h1:
        tail = tail + u1 * d1 / D
    if with_h2:
        tail = tail + u2 * K / (2 * D)
    r[3] = 1 / (2 * x1) - x2 * d4 / (2 * x1**2 * D) - tail / (2 * x1**2)
    h = u0 * 2 / D
    if with_h1:
        h = h + u1 * (d4 - 2) / D
    r[4] = 2 * d4 / (D * x2) + x2 * d3 / (4 * x1**2 * D) - h / x2**2
    return r


def ricci_IIb(dims: Decomposition, m: MetricParams) -> RicciComponents:
    if dims.dtype not in ("IIa", "IIb"):
        raise ValueError(f"ricci_IIb needs a type II decomposition, got {dims.dtype}")
    _check(m.as_tuple(), (0, 1, 2, 3, 4))
    return _closed_form_ricci(dims.d1, dims.d2, dims.d3, dims.d4, m, True, True)


def ricci_Ib(dims: Decomposition, m: MetricParams) -> RicciComponents:
    if dims.dtype != "Ib":
        raise ValueError(f"ricci_Ib needs a type Ib decomposition, got {dims.dtype}")
    _check(m.as_tuple(), (0, 1, 3, 4))
    return _closed_form_ricci(dims.d1, 0, dims.d3, dims.d4, m, True, False)


def ricci_Ia(dims: Decomposition, m: MetricParams) -> RicciComponents:
    """The d4 = 2 specialisation on blocks (h0, h2, m1, m2)."""
    if dims.dtype != "Ia":
        raise ValueError(f"ricci_Ia needs a type Ia decomposition, got {dims.dtype}")
    _check(m.as_tuple(), (0, 2, 3, 4))
    u0, _, u2, x1, x2 = m.as_tuple()
    d2, d3 = dims.d2, dims.d3
    D = Fraction(d3 + 8)
    return {
        0: u0 * d3 / (4 * x1**2 * D) + u0 * 2 / (x2**2 * D),
        2: (d2 - d3 * (d3 + 2) / (2 * D)) / (4 * d2 * u2) + u2 * d3 * (d3 + 2) / (8 * d2 * x1**2 * D),
        3: 1 / (2 * x1) - x2 / (x1**2 * D) - (u0 / D + u2 * (d3 + 2) / (2 * D)) / (2 * x1**2),
        4: 4 / (D * x2) + x2 * d3 / (4 * x1**2 * D) - u0 * 2 / (x2**2 * D),
    }


def ricci_specialized(dims: Decomposition, m: MetricParams) -> RicciComponents:
    if dims.dtype == "Ia":
        return ricci_Ia(dims, m)
    if dims.dtype == "Ib":
        return ricci_Ib(dims, m)
    return ricci_IIb(dims, m)


def ricci_quotient(t: BracketTable, dims: Decomposition, w: QuotientMetricParams) -> tuple:
    """``(rbar_1, rbar_2)`` for the metric ``w1 B|m1 + w2 B|m2`` on G/H."""
    w1, w2 = w.w1, w.w2
    for v in (w1, w2):
        if isinstance(v, (int, Fraction)) and v == 0:
            raise ZeroParameter("quotient metric weight is zero")
    d3, d4 = dims.d3, dims.d4
    x = t(4, 3, 3)
    r1 = 1 / (2 * w1) - w2 * x / (2 * d3 * w1**2)
    r2 = (Fraction(1, 2) - t(3, 4, 3) / (2 * d4)) / w2 + w2 * x / (4 * d4 * w1**2)
    return r1, r2
