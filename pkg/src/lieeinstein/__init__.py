"""Left-invariant Einstein metrics on compact simple Lie groups, via two-summand flag spaces."""
from .classify import Classification, classify
from .flagdecomp import Decomposition, decompose, find_nodes_with_q2
from .rootsys import LieKind, enumerate_positive_roots
from .solver import EinsteinSolution, SolveResult, solve

__all__ = [
    "Classification",
    "Decomposition",
    "EinsteinSolution",
    "LieKind",
    "SolveResult",
    "classify",
    "decompose",
    "enumerate_positive_roots",
    "find_nodes_with_q2",
    "solve",
]
