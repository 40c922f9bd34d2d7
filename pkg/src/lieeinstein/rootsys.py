"""Root systems of the simple types B, C, D, E6, E7, E8, F4, G2.

Simple roots follow Bourbaki numbering; indices are 0-based in code
(``alpha_1`` is index 0) and 1-based in user-facing output.

Positive roots are generated by the usual string algorithm: starting from
the simple roots, ``beta + alpha_i`` is a root exactly when the
``alpha_i``-string through ``beta`` extends upward, i.e. when
``p - <beta, alpha_i^vee> > 0`` with ``p`` the downward string length.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

FAMILIES = ("B", "C", "D", "E6", "E7", "E8", "F4", "G2")
EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
MIN_RANK = {"B": 2, "C": 3, "D": 4}


class RankError(ValueError):
    pass


@dataclass(frozen=True)
class LieKind:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family in EXCEPTIONAL_RANK:
            if self.rank != EXCEPTIONAL_RANK[self.family]:
                raise RankError(f"{self.family} has rank {EXCEPTIONAL_RANK[self.family]}, got {self.rank}")
        elif self.rank < MIN_RANK[self.family]:
            raise RankError(f"{self.family}_n needs n >= {MIN_RANK[self.family]}, got {self.rank}")

    @classmethod
    def parse(cls, name: str, rank: int | None = None) -> "LieKind":
        """``parse("E7")``, ``parse("B", 5)`` or ``parse("B5")``."""
        name = name.strip().upper()
        if name in EXCEPTIONAL_RANK:
            return cls(name, EXCEPTIONAL_RANK[name] if rank is None else rank)
        fam, rest = name[:1], name[1:]
        if rest:
            rank = int(rest)
        if rank is None:
            raise RankError(f"family {fam} needs a rank")
        return cls(fam, rank)

    @property
    def name(self) -> str:
        return self.family if self.family in EXCEPTIONAL_RANK else f"{self.family}{self.rank}"

    @property
    def dimension(self) -> int:
        n = self.rank
        if self.family in ("B", "C"):
            return n * (2 * n + 1)
        if self.family == "D":
            return n * (2 * n - 1)
        return {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}[self.family]

    def __str__(self) -> str:
        return self.name


Root = tuple[int, ...]


def _gram_data(kind: LieKind) -> tuple[list[Fraction], dict[tuple[int, int], Fraction]]:
    """Squared lengths of the simple roots and their nonzero mutual products."""
    n = kind.rank
    f = kind.family
    lengths = [Fraction(2)] * n
    edges: dict[tuple[int, int], Fraction] = {}

    def link(i, j, val=-1):
        edges[(i, j)] = Fraction(val)

    if f == "B":
        for i in range(n - 1):
            link(i, i + 1)
        lengths[n - 1] = Fraction(1)
    elif f == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2)
        lengths[n - 1] = Fraction(4)
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f in ("E6", "E7", "E8"):
        # Bourbaki: 1-3-4-5-6-7-8 chain, 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F4":
        link(0, 1)
        link(1, 2)
        link(2, 3, Fraction(-1, 2))
        lengths[2] = lengths[3] = Fraction(1)
    elif f == "G2":
        lengths = [Fraction(2), Fraction(6)]
        link(0, 1, -3)
    return lengths, edges


def _gram(kind: LieKind) -> list[list[Fraction]]:
    lengths, edges = _gram_data(kind)
    n = kind.rank
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = lengths[i]
    for (i, j), v in edges.items():
        g[i][j] = g[j][i] = v
    return g


@dataclass(frozen=True)
class RootSystem:
    kind: LieKind
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root

    @property
    def rank(self) -> int:
        return self.kind.rank

    def inner(self, a: Root, b: Root) -> Fraction:
        g, den = self._integer_gram
        ia = [i for i, c in enumerate(a) if c]
        jb = [j for j, c in enumerate(b) if c]
        return Fraction(sum(a[i] * b[j] * g[i][j] for i in ia for j in jb), den)

    @property
    def _integer_gram(self) -> tuple[tuple[tuple[int, ...], ...], int]:
        # gram scaled to integers by the lcm of its denominators
        cached = self.__dict__.get("_ig")
        if cached is None:
            den = math.lcm(*(x.denominator for row in self.gram for x in row))
            rows = tuple(tuple(int(x * den) for x in row) for row in self.gram)
            cached = (rows, den)
            object.__setattr__(self, "_ig", cached)
        return cached

    def is_root(self, a: Root) -> bool:
        return a in self._root_set

    @property
    def _root_set(self) -> frozenset[Root]:
        s = self.__dict__.get("_rs")
        if s is None:
            s = frozenset(self.positive_roots)
            object.__setattr__(self, "_rs", s)
        return s

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def adjacency(self) -> dict[int, set[int]]:
        """Dynkin diagram neighbours (nonzero off-diagonal Cartan entries)."""
        n = self.rank
        return {i: {j for j in range(n) if j != i and self.cartan[i][j]} for i in range(n)}


def cartan_matrix(kind: LieKind) -> tuple[tuple[int, ...], ...]:
    """``A[i][j] = 2 (a_i, a_j) / (a_i, a_i)``."""
    g = _gram(kind)
    n = kind.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = 2 * g[i][j] / g[i][i]
            assert v.denominator == 1
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def _pairing(root: Root, i: int, cartan) -> int:
    # <root, alpha_i^vee> = sum_j m_j A[i][j]
    return sum(m * cartan[i][j] for j, m in enumerate(root) if m)


def _close(simple: list[Root], cartan) -> set[Root]:
    n = len(simple)
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - _pairing(beta, i, cartan) > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return roots


def enumerate_positive_roots(kind: LieKind) -> RootSystem:
    cartan = cartan_matrix(kind)
    n = kind.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = _close(simple, cartan)
    ordered = tuple(sorted(roots))
    top = max(ordered, key=sum)
    return RootSystem(
        kind=kind,
        cartan=cartan,
        gram=tuple(tuple(r) for r in _gram(kind)),
        positive_roots=ordered,
        highest_root=top,
    )


def coefficient_at(root: Root, i0: int) -> int:
    return root[i0]


def extended_neighbors(rs: RootSystem) -> set[int]:
    """Simple roots joined to ``-highest_root`` in the extended diagram."""
    top = rs.highest_root
    return {i for i in range(rs.rank) if rs.inner(rs.simple_root(i), top) != 0}
