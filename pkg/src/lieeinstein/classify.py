"""Naturally-reductive test for Einstein solutions.

A metric of the five-block family is naturally reductive exactly when one
of two equality patterns holds:

* ``x1 = x2``: naturally reductive with respect to G x H;
* ``u0 = u1 = x2`` (``u0 = x2`` when d4 = 2): with respect to G x K, where
  K is the subgroup generated by h and m2.

Equalities are tested on the rational intervals carried by a solution.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .flagdecomp import Decomposition
from .interval import Interval, as_interval

TOL = Fraction(1, 10**6)

BI_INVARIANT = "BiInvariant"
NR_GXK = "NaturallyReductive_GxK"
NR_GXH = "NaturallyReductive_GxH"
NOT_NR = "NotNaturallyReductive"


class Indeterminate(ArithmeticError):
    pass


@dataclass(frozen=True)
class Classification:
    verdict: str
    witness: tuple[str, ...]

    @property
    def naturally_reductive(self) -> bool:
        return self.verdict != NOT_NR


def approx_equal(a: Any, b: Any, tol: Fraction = TOL) -> bool:
    """Decide ``a == b`` for rationals or rational intervals.

    Disjoint intervals are unequal; overlapping ones are equal if their
    hull is relatively narrower than ``tol``.  Anything else is undecided.
    """
    a, b = as_interval(a), as_interval(b)
    if not a.overlaps(b):
        return False
    h = a.hull(b)
    scale = max(a.mag(), b.mag())
    if h.width <= tol * scale:
        return True
    raise Indeterminate(f"cannot decide equality of {a!r} and {b!r}")


def _u_pattern(d: Decomposition) -> tuple[int, ...]:
    # h1 belongs to K only when m2 brackets nontrivially into it
    if d.d4 == 2 or d.d1 == 0:
        return (0,)
    return (0, 1)


def classify(sol, dims: Decomposition | None = None) -> Classification:
    d = dims or sol.dims
    p = sol.params
    x1, x2 = p.x1, p.x2
    fired = []
    if approx_equal(x1, x2):
        fired.append("x1=x2")
    us = _u_pattern(d)
    if all(approx_equal(p.y(k), x2) for k in us):
        fired.append("=".join(f"u{k}" for k in us) + "=x2")
    present = {"Ia": (0, 2, 3, 4), "Ib": (0, 1, 3, 4)}.get(d.dtype, (0, 1, 2, 3, 4))
    if all(approx_equal(p.y(k), x2) for k in present):
        return Classification(BI_INVARIANT, tuple(fired))
    if len(fired) == 2 or (fired and fired[0] != "x1=x2"):
        return Classification(NR_GXK, tuple(fired))
    if fired:
        return Classification(NR_GXH, tuple(fired))
    return Classification(NOT_NR, ())


def generic_branch_is_nr_IIb(d: Decomposition) -> bool:
    """The naturally reductive u2 branch forces u0 = u1 = x2 identically."""
    from .solver import X, affine_solve, nr_branch_u2, nr_einstein_constant

    aff = affine_solve(d)
    u0, u1, e = aff.at(nr_branch_u2(d))
    return u0 == X and u1 == X and e == nr_einstein_constant(d)
