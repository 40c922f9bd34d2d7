"""Structure-constant sums ``[k; ij]`` for the five-block decomposition.

Block indices: 0 = h0, 1 = h1, 2 = h2, 3 = m1, 4 = m2.  The sums are
invariant under every permutation of (k, i, j), so a table is keyed by the
sorted triple and lookups symmetrise.

Entries come from closed forms in the block dimensions; they are not
rebuilt from a Chevalley basis.  :func:`verify_identities` checks them
against the row-sum and Kahler-Einstein constraints they must satisfy.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .flagdecomp import Decomposition

BLOCKS = (0, 1, 2, 3, 4)


class NegativeEntry(ValueError):
    pass


def _key(k: int, i: int, j: int) -> tuple[int, int, int]:
    return tuple(sorted((k, i, j)))


@dataclass(frozen=True)
class BracketTable:
    entries: Mapping[tuple[int, int, int], Fraction]
    dims: Decomposition
    blocks: tuple[int, ...] = field(default=BLOCKS)

    def __call__(self, k: int, i: int, j: int) -> Fraction:
        return self.entries.get(_key(k, i, j), Fraction(0))

    def get(self, k: int, i: int, j: int) -> Fraction:
        return self(k, i, j)

    def block_dim(self, k: int) -> int:
        d = self.dims
        return (d.d0, d.d1, d.d2, d.d3, d.d4)[k]

    def nonzero(self) -> dict[tuple[int, int, int], Fraction]:
        return {k: v for k, v in self.entries.items() if v != 0}


def _closed_form_entries(d1, d2, d3, d4, with_h2: bool) -> dict[tuple[int, int, int], Fraction]:
    D = Fraction(d3 + 4 * d4)
    k = d3 + 2 * d4 - 2 * d1 - 2
    e = {
        _key(0, 3, 3): d3 / D,
        _key(0, 4, 4): 4 * d4 / D,
        _key(1, 1, 1): 2 * d4 * (2 * d1 + 2 - d4) / D,
        _key(1, 3, 3): d1 * d3 / D,
        _key(1, 4, 4): 2 * d4 * (d4 - 2) / D,
        _key(4, 3, 3): d3 * d4 / D,
    }
    if with_h2:
        e[_key(2, 2, 2)] = d2 - d3 * k / (2 * D)
        e[_key(2, 3, 3)] = d3 * k / (2 * D)
    for key, v in e.items():
        if v < 0:
            raise NegativeEntry(f"[{key}] = {v} < 0 for dims {(d1, d2, d3, d4)}")
    return e


def closed_form_IIb(d: Decomposition) -> BracketTable:
    """Eight-entry table for the two-component types (also used for IIa)."""
    if d.dtype not in ("IIa", "IIb"):
        raise ValueError(f"closed_form_IIb needs a type II decomposition, got {d.dtype}")
    return BracketTable(_closed_form_entries(d.d1, d.d2, d.d3, d.d4, True), d, (0, 1, 2, 3, 4))


def closed_form_Ib(d: Decomposition) -> BracketTable:
    if d.dtype != "Ib" or d.d2:
        raise ValueError(f"closed_form_Ib needs a type Ib decomposition, got {d.dtype}")
    return BracketTable(_closed_form_entries(d.d1, 0, d.d3, d.d4, False), d, (0, 1, 3, 4))


def closed_form_Ia(d: Decomposition) -> BracketTable:
    """Type Ia: the two-component table with h1 = 0, on blocks (h0, h2, m1, m2)."""
    if d.dtype != "Ia" or d.d1:
        raise ValueError(f"closed_form_Ia needs a type Ia decomposition, got {d.dtype}")
    e = _closed_form_entries(0, d.d2, d.d3, d.d4, True)
    e = {k: v for k, v in e.items() if 1 not in k}
    return BracketTable(e, d, (0, 2, 3, 4))


def closed_form(d: Decomposition) -> BracketTable:
    if d.dtype in ("IIa", "IIb"):
        return closed_form_IIb(d)
    if d.dtype == "Ib":
        return closed_form_Ib(d)
    return closed_form_Ia(d)


@dataclass
class IdentityReport:
    row_sums: dict[int, bool]
    kahler_einstein_entry: bool
    quotient_einstein: bool
    symmetric: bool

    @property
    def ok(self) -> bool:
        return (
            all(self.row_sums.values())
            and self.kahler_einstein_entry
            and self.quotient_einstein
            and self.symmetric
        )


def row_sum(t: BracketTable, k: int) -> Fraction:
    """``sum_{i,j} [j; k i]`` over the blocks present; equals ``d_k``."""
    return sum((t(j, k, i) for i in t.blocks for j in t.blocks), Fraction(0))


def verify_identities(t: BracketTable) -> IdentityReport:
    from .ricci import QuotientMetricParams, ricci_quotient

    rows = {k: row_sum(t, k) == t.block_dim(k) for k in t.blocks}
    d3, d4 = t.dims.d3, t.dims.d4
    ke = t(4, 3, 3) == Fraction(d3 * d4, d3 + 4 * d4)
    rbar = ricci_quotient(t, t.dims, QuotientMetricParams(Fraction(1), Fraction(2)))
    sym = all(
        t(k, i, j) == t(k, j, i) == t(j, k, i) for k in t.blocks for i in t.blocks for j in t.blocks
    )
    return IdentityReport(rows, ke, rbar[0] == rbar[1], sym)
