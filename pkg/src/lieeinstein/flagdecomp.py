"""Isotropy decomposition attached to one painted node.

For a painted simple root ``alpha_{i0}`` the positive roots are graded by
their ``i0`` coefficient.  When the grading has exactly two nonzero levels
the Lie algebra splits into five blocks

    g = h0 + h1 + h2 + m1 + m2

with ``h0`` the one-dimensional centre, ``h1``/``h2`` the semisimple part of
the isotropy algebra and ``m_k`` spanned by the root vectors of level ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .rootsys import Root, RootSystem, extended_neighbors

TYPES = ("Ia", "Ib", "IIa", "IIb")


class NotTwoSummands(ValueError):
    """The painted node does not give exactly two isotropy summands."""


@dataclass(frozen=True)
class PaintedDiagram:
    rs: RootSystem
    i0: int

    def __post_init__(self):
        if not 0 <= self.i0 < self.rs.rank:
            raise IndexError(f"node {self.i0} out of range for rank {self.rs.rank}")


@dataclass(frozen=True)
class Decomposition:
    group: str
    node: int  # 0-based Bourbaki index of the painted root
    q: int
    d0: int
    d1: int
    d2: int
    d3: int
    d4: int
    dtype: str
    pi0_components: tuple[frozenset[int], ...]
    h1_nodes: frozenset[int] = frozenset()
    h2_nodes: frozenset[int] = frozenset()

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return (self.d1, self.d2, self.d3, self.d4)

    @property
    def total(self) -> int:
        return self.d0 + self.d1 + self.d2 + self.d3 + self.d4

    @classmethod
    def from_dims(cls, d1: int, d2: int, d3: int, d4: int, dtype: str, group: str = "?") -> "Decomposition":
        """Build a decomposition from block dimensions alone (no root data)."""
        if dtype not in TYPES:
            raise ValueError(f"unknown type {dtype!r}")
        if dtype == "Ia" and d1:
            raise ValueError("Type Ia carries its ideal in d2 (d1 must be 0)")
        if dtype == "Ib" and d2:
            raise ValueError("Type Ib carries its ideal in d1 (d2 must be 0)")
        return cls(group, -1, 2, 1, d1, d2, d3, d4, dtype, ())


def grade_roots(pd: PaintedDiagram) -> list[list[Root]]:
    """Positive roots split by their coefficient at the painted node."""
    t = pd.rs.highest_root[pd.i0]
    levels: list[list[Root]] = [[] for _ in range(t + 1)]
    for r in pd.rs.positive_roots:
        levels[r[pd.i0]].append(r)
    return levels


def _components(nodes: set[int], adj: dict[int, set[int]]) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(nodes):
        if start in seen:
            continue
        comp, stack = set(), [start]
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(w for w in adj[v] if w in nodes and w not in comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _ideal_dim(rs: RootSystem, nodes: frozenset[int]) -> int:
    support = sum(1 for r in rs.positive_roots if all(m == 0 or i in nodes for i, m in enumerate(r)))
    return len(nodes) + 2 * support


def _commutes_with(rs: RootSystem, nodes: frozenset[int], level: list[Root]) -> bool:
    """True when the ideal generated by ``nodes`` brackets trivially with ``level``."""
    for j in nodes:
        a = rs.simple_root(j)
        for beta in level:
            if rs.inner(a, beta) != 0:
                return False
            up = tuple(x + y for x, y in zip(beta, a))
            if rs.is_root(up):
                return False
    return True


def decompose(pd: PaintedDiagram) -> Decomposition:
    rs, i0 = pd.rs, pd.i0
    levels = grade_roots(pd)
    t = len(levels) - 1
    if t != 2:
        raise NotTwoSummands(f"{rs.kind.name} node {i0 + 1}: grading has {t} levels, need 2")

    adj = rs.adjacency()
    comps = _components(set(range(rs.rank)) - {i0}, adj)
    ext = extended_neighbors(rs)
    adjacent = i0 in ext
    dtype = ("II" if len(comps) >= 2 else "I") + ("a" if adjacent else "b")

    # h2 is the part of the isotropy algebra acting trivially on m2.  When
    # the painted node is itself next to -highest_root every component
    # qualifies; then h1 is the one holding the lowest-numbered node.
    def holds_neighbor(c):
        return bool(c & ext)

    if dtype in ("Ia", "Ib"):
        (only,) = comps
        if dtype == "Ia":
            h1, h2 = frozenset(), only
        else:
            h1, h2 = only, frozenset()
    else:
        if adjacent:
            first = min(comps, key=min)
        else:
            first = next(c for c in comps if holds_neighbor(c))
        h1 = first
        h2 = frozenset().union(*(c for c in comps if c is not first))

    if h2 and not _commutes_with(rs, h2, levels[2]):
        raise AssertionError(f"{rs.kind.name} node {i0 + 1}: chosen h2 does not commute with m2")

    d1 = _ideal_dim(rs, h1) if h1 else 0
    d2 = _ideal_dim(rs, h2) if h2 else 0
    d3 = 2 * len(levels[1])
    d4 = 2 * len(levels[2])
    dec = Decomposition(
        group=rs.kind.name,
        node=i0,
        q=t,
        d0=1,
        d1=d1,
        d2=d2,
        d3=d3,
        d4=d4,
        dtype=dtype,
        pi0_components=tuple(comps),
        h1_nodes=h1,
        h2_nodes=h2,
    )
    if dec.total != rs.kind.dimension:
        raise AssertionError(f"block dimensions {dec.dims} do not add up to dim {rs.kind.name}")
    return dec


def find_nodes_with_q2(rs: RootSystem) -> list[tuple[int, Decomposition]]:
    return [(i, decompose(PaintedDiagram(rs, i))) for i in range(rs.rank) if rs.highest_root[i] == 2]
