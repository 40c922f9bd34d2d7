from __future__ import annotations

from functools import lru_cache

import pytest

from lieeinstein import reference as ref
from lieeinstein.flagdecomp import Decomposition, find_nodes_with_q2
from lieeinstein.rootsys import LieKind, enumerate_positive_roots

# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: dict[int, str] = {}


@lru_cache(maxsize=None)
def nodes_of(name: str, rank: int | None = None) -> tuple[Decomposition, ...]:
    rs = enumerate_positive_roots(LieKind.parse(name, rank))
    return tuple(d for _, d in find_nodes_with_q2(rs))


def iib(group: str, n: int = 0, p: int = 0) -> Decomposition:
    return Decomposition.from_dims(*ref.dims_IIb(group, n, p), "IIb", f"{group}{n or ''}")


def ib(group: str) -> Decomposition:
    return Decomposition.from_dims(*ref.DIMS_IB[group], "Ib", group)


def small_decompositions(n_max: int = 8) -> list[Decomposition]:
    """Every two-summand decomposition of the exceptional groups and of B, C, D up to rank ``n_max``."""
    out = []
    for g in ("G2", "F4", "E6", "E7", "E8"):
        out.extend(nodes_of(g))
    for fam, lo in (("B", 2), ("C", 3), ("D", 4)):
        for n in range(lo, n_max + 1):
            out.extend(nodes_of(fam, n))
    return out


@pytest.fixture(scope="session")
def e6_iib() -> Decomposition:
    return iib("E6")


@pytest.fixture(scope="session")
def e7_iib() -> Decomposition:
    return iib("E7")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
