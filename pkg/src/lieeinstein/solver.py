"""Einstein equations for the five-block metrics and their exact solution.

The metric is normalised by ``x1 = 1`` throughout.  For every type the
system ``r_k = e`` is reduced to one univariate polynomial in ``x2`` whose
positive roots are isolated exactly; each root is carried back through the
elimination with interval arithmetic and accepted only if the Ricci
residual of the *unreduced* system is rigorously small.

Equations are keyed by the block whose Ricci component they set equal to
``e``; each one is ``multiplier(k) * (e - r_k)`` with denominators cleared.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from .flagdecomp import Decomposition
from .interval import Interval
from .ratpoly import (
    IsolatedRoot,
    Poly,
    RationalFunction,
    count_roots,
    positive_roots,
    refine,
    try_rational,
)
from .ricci import MetricParams, ricci_specialized

X = RationalFunction.x()

RESIDUAL_THRESHOLD = Fraction(1, 10**8)
START_WIDTH = Fraction(1, 10**12)
MIN_WIDTH = Fraction(1, 10**30)

NR_BRANCH = "NaturallyReductiveBranch"
GENERIC_BRANCH = "GenericBranch"
BI_INVARIANT = "BiInvariant"


class DegenerateDenominator(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# equations
# ---------------------------------------------------------------------------

def _D(d: Decomposition) -> int:
    return d.d3 + 4 * d.d4


def _K(d: Decomposition) -> int:
    """Coefficient of ``u2`` in the m1 equation; vanishes for type Ib."""
    return -2 - 2 * d.d1 + d.d3 + 2 * d.d4


def einstein_equations(d: Decomposition, u0, u1, u2, x2, e) -> dict[int, Any]:
    """Polynomial forms of ``r_k = e`` (x1 = 1), keyed by block.

    Blocks absent from the decomposition are omitted.
    """
    d1, d2, d3, d4 = d.dims
    D = _D(d)
    eqs = {
        0: -4 * d4 * u0 + 4 * D * e * x2**2 - d3 * u0 * x2**2,
        3: -2 * d3 - 8 * d4 + 4 * D * e + 2 * u0 + 2 * d1 * u1 + _K(d) * u2 + 2 * d4 * x2,
        4: 8 * u0 - 4 * (2 - d4) * u1 - 8 * d4 * x2 + 4 * D * e * x2**2 - d3 * x2**3,
    }
    if d1:
        eqs[1] = (
            2 * d4 * (2 - d4) * u1**2
            - 2 * d4 * (2 + 2 * d1 - d4) * x2**2
            + 4 * d1 * D * e * u1 * x2**2
            - d1 * d3 * u1**2 * x2**2
        )
    if d2:
        eqs[2] = (
            -2 * d3 - 2 * d1 * d3 - 2 * d2 * d3 + d3**2 - 8 * d2 * d4 + 2 * d3 * d4
            + 8 * d2 * D * e * u2
            + d3 * (2 + 2 * d1 - d3 - 2 * d4) * u2**2
        )
    return dict(sorted(eqs.items()))


def equation_multipliers(d: Decomposition, u1, u2, x2) -> dict[int, Any]:
    """``eq_k = multiplier_k * (e - r_k)``."""
    D = _D(d)
    m = {0: 4 * D * x2**2, 3: 4 * D, 4: 4 * D * x2**2}
    if d.d1:
        m[1] = 4 * d.d1 * D * u1 * x2**2
    if d.d2:
        m[2] = 8 * d.d2 * D * u2
    return dict(sorted(m.items()))


# ---------------------------------------------------------------------------
# linear part
# ---------------------------------------------------------------------------

def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _is_zero(v) -> bool:
    if isinstance(v, RationalFunction):
        return v.is_zero()
    return v == 0


def linear_solve(d: Decomposition, x2, u2=Fraction(0)):
    """Solve the h0, m1 and m2 equations for ``(u0, u1, e)``.

    ``x2`` and ``u2`` may be rationals or rational functions.
    """
    d1, _, d3, d4 = d.dims
    D = _D(d)
    m = [
        [-(4 * d4 + d3 * x2**2), Fraction(0), 4 * D * x2**2],
        [Fraction(2), Fraction(2 * d1), Fraction(4 * D)],
        [Fraction(8), Fraction(-4 * (2 - d4)), 4 * D * x2**2],
    ]
    rhs = [
        Fraction(0) + 0 * x2,
        2 * d3 + 8 * d4 - _K(d) * u2 - 2 * d4 * x2,
        8 * d4 * x2 + d3 * x2**3,
    ]
    det = _det3(m)
    if _is_zero(det):
        raise DegenerateDenominator(f"linear system is singular at x2 = {x2}")
    out = []
    for col in range(3):
        mc = [[rhs[r] if c == col else m[r][c] for c in range(3)] for r in range(3)]
        out.append(_det3(mc) / det)
    return tuple(out)


def linear_solve_IIb(d: Decomposition, x2, u2):
    if d.dtype != "IIb":
        raise ValueError(f"expected a type IIb decomposition, got {d.dtype}")
    return linear_solve(d, x2, u2)


def linear_solve_Ib(d: Decomposition, x2):
    if d.dtype != "Ib":
        raise ValueError(f"expected a type Ib decomposition, got {d.dtype}")
    return linear_solve(d, x2)


def singular_locus(d: Decomposition) -> Poly:
    """Polynomial in x2 whose roots make the linear solve degenerate."""
    d1, _, d3, d4 = d.dims
    return Poly.from_descending(
        [d1 * d3, 0, 2 * (4 + 4 * d1 + 2 * d3 - 2 * d4 + 2 * d1 * d4 - d3 * d4), 0, -8 * d4 * (d4 - 2)]
    )


# ---------------------------------------------------------------------------
# u2 branches (type IIb)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineSolve:
    """``(u0, u1, e) = base + slope * u2`` as rational functions of x2."""

    base: tuple
    slope: tuple

    def at(self, u2):
        return tuple(b + s * u2 for b, s in zip(self.base, self.slope))


def affine_solve(d: Decomposition, x2=X) -> AffineSolve:
    at0 = linear_solve(d, x2, Fraction(0))
    at1 = linear_solve(d, x2, Fraction(1))
    return AffineSolve(at0, tuple(b - a for a, b in zip(at0, at1)))


def u2_quadratic(d: Decomposition, x2=X, aff: AffineSolve | None = None):
    """Coefficients ``(A, B, C)`` of the h1 equation as a quadratic in u2."""
    d1, _, d3, d4 = d.dims
    D = _D(d)
    aff = aff or affine_solve(d, x2)
    _, p, r = aff.base
    _, q, s = aff.slope
    c_sq = 2 * d4 * (2 - d4) - d1 * d3 * x2**2
    c_mix = 4 * d1 * D * x2**2
    c_0 = -2 * d4 * (2 + 2 * d1 - d4) * x2**2
    A = c_sq * q * q + c_mix * s * q
    B = 2 * c_sq * p * q + c_mix * (r * q + s * p)
    C = c_sq * p * p + c_mix * r * p + c_0
    return A, B, C


def nr_branch_u2(d: Decomposition, x2=X):
    """The branch of u2 that makes the metric naturally reductive."""
    d1, _, d3, d4 = d.dims
    den = (2 + 2 * d1 - d3 - 2 * d4) * x2
    if _is_zero(den):
        raise DegenerateDenominator("naturally reductive branch has a vanishing denominator")
    return (4 * d4 - (2 * d3 + 8 * d4) * x2 + (2 + 2 * d1 + d3 + 2 * d4) * x2**2) / den


def nr_einstein_constant(d: Decomposition, x2=X):
    return (4 * d.d4 + d.d3 * x2**2) / (4 * _D(d) * x2)


def u2_branches(d: Decomposition, x2=X):
    """``(naturally_reductive, generic)`` roots of the u2 quadratic.

    With a rational function argument the first root is checked to be an
    exact root and the second is obtained from the sum of roots.
    """
    if d.dtype != "IIb":
        raise ValueError(f"expected a type IIb decomposition, got {d.dtype}")
    A, B, C = u2_quadratic(d, x2)
    if _is_zero(A):
        raise DegenerateDenominator("u2 quadratic degenerates to a linear equation")
    nr = nr_branch_u2(d, x2)
    if not _is_zero(A * nr * nr + B * nr + C):
        raise ArithmeticError("naturally reductive branch is not a root of the u2 quadratic")
    return nr, -B / A - nr


def _numerator(v) -> Poly:
    if isinstance(v, RationalFunction):
        return v.num
    return Poly.const(v)


def _primitive(p: Poly) -> Poly:
    if p.is_zero():
        raise ArithmeticError("elimination produced the zero polynomial")
    return p.primitive()


@dataclass(frozen=True)
class Parametrisation:
    """Metric scalars and Einstein constant as rational functions of x2."""

    u0: RationalFunction
    u1: RationalFunction
    u2: RationalFunction
    e: RationalFunction


def generic_parametrisation_IIb(d: Decomposition) -> Parametrisation:
    aff = affine_solve(d)
    _, u2 = u2_branches(d)
    u0, u1, e = aff.at(u2)
    return Parametrisation(u0, u1, u2, e)


def nr_parametrisation_IIb(d: Decomposition) -> Parametrisation:
    return Parametrisation(X, X, nr_branch_u2(d), nr_einstein_constant(d))


def _h2_equation_poly(d: Decomposition, par: Parametrisation) -> Poly:
    eq = einstein_equations(d, par.u0, par.u1, par.u2, X, par.e)[2]
    return _primitive(_numerator(eq))


def build_polynomial_IIb(d: Decomposition) -> Poly:
    """Univariate polynomial in x2 on the generic u2 branch."""
    if d.dtype != "IIb":
        raise ValueError(f"expected a type IIb decomposition, got {d.dtype}")
    return _h2_equation_poly(d, generic_parametrisation_IIb(d))


def build_nr_polynomial_IIb(d: Decomposition) -> Poly:
    return _h2_equation_poly(d, nr_parametrisation_IIb(d))


# ---------------------------------------------------------------------------
# type Ib
# ---------------------------------------------------------------------------

def nr_quadratic_Ib(d: Decomposition) -> Poly:
    d1, _, d3, d4 = d.dims
    return Poly.from_descending([2 * d1 + d3 + 2 * d4 + 2, -2 * (d3 + 4 * d4), 4 * d4])


def generic_octic_Ib(d: Decomposition) -> Poly:
    d1, _, d3, d4 = d.dims
    D = d3 + 4 * d4
    c = [
        d1 * d3**3 * (d3 + 2 * d4 + 2),
        -2 * d1 * d3**3 * D,
        2 * d3**2 * d4
        * (4 * d1**2 + 10 * d3 * d1 + 10 * d4 * d1 + 28 * d1 + 2 * d4**2 - 2 * d3 + d3 * d4 - 2 * d4 - 4),
        -4 * d3**2 * D * (d4**2 + 6 * d1 * d4 - 2 * d4 + 4 * d1),
        8 * d3 * d4
        * (
            4 * d4**3 + 8 * d1 * d4**2 + 5 * d3 * d4**2 + 8 * d4**2 + 8 * d1**2 * d4 + 24 * d1 * d4
            + 16 * d1 * d3 * d4 - 10 * d3 * d4 - 32 * d4 + 16 * d1**2 + 16 * d1
        ),
        -32 * d3 * d4 * D * (d4**2 + 3 * d1 * d4 + 2 * d1 - 4),
        32 * d4
        * (
            2 * d4**4 + 2 * d1 * d4**3 + 7 * d3 * d4**3 + 10 * d4**3 + 4 * d1**2 * d4**2
            + 10 * d1 * d3 * d4**2 - 10 * d3 * d4**2 - 12 * d4**2 + 16 * d1**2 * d4 - 24 * d1 * d4
            - 8 * d1 * d3 * d4 - 12 * d3 * d4 - 40 * d4 + 16 * d1**2 + 32 * d1 + 8 * d1 * d3 + 8 * d3 + 16
        ),
        -64 * (d4 - 2) * d4 * (d4 + 2) * (2 * d1 + d4 + 2) * D,
        128 * (d4 - 2) * d4**2 * (3 * d4**2 + 2 * d1 * d4 + 4 * d4 - 4 * d1 - 4),
    ]
    return Poly.from_descending(c)


def eliminated_numerator_Ib(d: Decomposition) -> Poly:
    u0, u1, e = linear_solve(d, X)
    return _numerator(einstein_equations(d, u0, u1, Fraction(1), X, e)[1])


@dataclass(frozen=True)
class IbSplit:
    quadratic: Poly
    octic: Poly
    cofactor: Poly
    numerator: Poly


def branch_split_Ib(d: Decomposition) -> IbSplit:
    if d.dtype != "Ib":
        raise ValueError(f"expected a type Ib decomposition, got {d.dtype}")
    quad, octic = nr_quadratic_Ib(d), generic_octic_Ib(d)
    num = eliminated_numerator_Ib(d)
    cof, rem = num.divmod(quad * octic)
    if not rem.is_zero():
        raise ArithmeticError(f"{d.group}: eliminated numerator is not divisible by both branch factors")
    return IbSplit(quad, octic, cof, num)


def ib_parametrisation(d: Decomposition) -> Parametrisation:
    u0, u1, e = linear_solve(d, X)
    return Parametrisation(u0, u1, RationalFunction(Poly.const(1)), e)


# ---------------------------------------------------------------------------
# types Ia and IIa
# ---------------------------------------------------------------------------

def forced_relation_check(d: Decomposition) -> bool:
    """``r0 - r4`` is ``(u0 - x2)`` times a positive function of x2.

    Checked as an identity in x2 with u0 entering affinely; ``u1``/``u2``
    are varied to confirm they do not appear.
    """
    if d.d4 != 2:
        return False

    def diff(u0, u1, u2):
        r = ricci_specialized(d, MetricParams(u0, u1, u2, Fraction(1), X))
        return r[0] - r[4]

    one = RationalFunction(Poly.const(1))
    base = diff(0 * one, one, one)
    slope = diff(one, one, one) - base
    if diff(one, 2 * one, 3 * one) != base + slope:
        return False
    D = _D(d)
    expected = d.d3 / (4 * Fraction(D)) + 4 / (D * X**2)
    return slope == expected and base == -X * expected


def _ia_parametrisation(d: Decomposition) -> Parametrisation:
    e = nr_einstein_constant(d)
    K = _K(d)
    u2 = (2 * d.d3 + 8 * d.d4 - 4 * _D(d) * e - 2 * X - 2 * d.d4 * X) / K
    return Parametrisation(X, RationalFunction(Poly.const(1)), u2, e)


@dataclass(frozen=True)
class IIaElimination:
    """u1 = alpha + beta u2; h1 and h2 equations as quadratics in u2."""

    alpha: RationalFunction
    beta: RationalFunction
    h1: tuple
    h2: tuple

    def resultant(self):
        a1, b1, c1 = self.h1
        a2, b2, c2 = self.h2
        return (a1 * c2 - a2 * c1) ** 2 - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1)

    def common_u2(self):
        a1, b1, c1 = self.h1
        a2, b2, c2 = self.h2
        return -(a1 * c2 - a2 * c1) / (a1 * b2 - a2 * b1)


def iia_elimination(d: Decomposition) -> IIaElimination:
    d1, d2, d3, d4 = d.dims
    D = _D(d)
    e = nr_einstein_constant(d)
    # m1 equation with u0 = x2: 2 d1 u1 + K u2 + rest = 0
    rest = -2 * d3 - 8 * d4 + 4 * D * e + 2 * X + 2 * d4 * X
    alpha = -rest / (2 * d1)
    beta = RationalFunction(Poly.const(Fraction(-_K(d), 2 * d1)))
    c_sq = 2 * d4 * (2 - d4) - d1 * d3 * X**2
    c_mix = 4 * d1 * D * e * X**2
    c_0 = -2 * d4 * (2 + 2 * d1 - d4) * X**2
    h1 = (c_sq * beta * beta, 2 * c_sq * alpha * beta + c_mix * beta, c_sq * alpha * alpha + c_mix * alpha + c_0)
    one = RationalFunction(Poly.const(1))
    h2 = (
        d3 * (2 + 2 * d1 - d3 - 2 * d4) * one,
        8 * d2 * D * e,
        (-2 * d3 - 2 * d1 * d3 - 2 * d2 * d3 + d3**2 - 8 * d2 * d4 + 2 * d3 * d4) * one,
    )
    return IIaElimination(alpha, beta, h1, h2)


# ---------------------------------------------------------------------------
# solutions
# ---------------------------------------------------------------------------

@dataclass
class EinsteinSolution:
    dims: Decomposition
    params: MetricParams
    e: Any
    branch: str
    residual_bound: Fraction
    x2: IsolatedRoot
    classification: Any = None

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (*self.params.as_tuple(), self.e))

    def values(self) -> dict[str, Any]:
        """Block scalars present for this type, plus ``e``."""
        names = {0: "u0", 1: "u1", 2: "u2", 3: "x1", 4: "x2"}
        out = {names[k]: self.params.y(k) for k in _blocks(self.dims)}
        out["e"] = self.e
        return out

    def floats(self) -> dict[str, float]:
        return {k: float(v) for k, v in self.values().items()}

    def rescaled_to_unit_e(self) -> "EinsteinSolution":
        """Same metric scaled so that the Einstein constant is 1."""
        lam = self.e
        return EinsteinSolution(
            self.dims, self.params.scaled(lam), lam * 0 + 1, self.branch,
            self.residual_bound * _upper(lam), self.x2, self.classification,
        )


@dataclass
class RejectedRoot:
    x2: IsolatedRoot
    branch: str
    reason: str


@dataclass
class SolveResult:
    dims: Decomposition
    solutions: list[EinsteinSolution] = field(default_factory=list)
    rejected: list[RejectedRoot] = field(default_factory=list)
    polynomials: dict[str, Poly] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def __iter__(self) -> Iterator[EinsteinSolution]:
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def by_branch(self, branch: str) -> list[EinsteinSolution]:
        return [s for s in self.solutions if s.branch == branch]

    @property
    def generic(self) -> list[EinsteinSolution]:
        return self.by_branch(GENERIC_BRANCH)


def _blocks(d: Decomposition) -> tuple[int, ...]:
    return {"Ia": (0, 2, 3, 4), "Ib": (0, 1, 3, 4)}.get(d.dtype, (0, 1, 2, 3, 4))


def _upper(v) -> Fraction:
    return v.hi if isinstance(v, Interval) else abs(v)


def _mag(v) -> Fraction:
    return v.mag() if isinstance(v, Interval) else abs(v)


def residual_bound(d: Decomposition, params: MetricParams, e) -> Fraction:
    """Rigorous upper bound on ``max_k |r_k - e|`` over the blocks present."""
    r = ricci_specialized(d, params)
    return max(_mag(r[k] - e) for k in _blocks(d))


def verify_solution(sol: EinsteinSolution, d: Decomposition | None = None) -> Fraction:
    return residual_bound(d or sol.dims, sol.params, sol.e)


def _eval(f: RationalFunction, x):
    if isinstance(x, Fraction):
        den = f.den(x)
        if den == 0:
            raise ZeroDivisionError
        return f.num(x) / den
    return f.num(x) / f.den(x)


def _positive(v) -> bool | None:
    """True / False when the sign is decided, None when undecided."""
    if isinstance(v, Interval):
        if v.is_positive():
            return True
        if v.hi <= 0:
            return False
        return None
    return v > 0


def realise(
    d: Decomposition,
    par: Parametrisation,
    root: IsolatedRoot,
    branch: str,
    threshold: Fraction = RESIDUAL_THRESHOLD,
    width: Fraction = START_WIDTH,
) -> EinsteinSolution | RejectedRoot:
    """Back-substitute an isolated root and decide whether it is a solution."""
    root = try_rational(refine(root, width))
    reason = "indeterminate"
    while True:
        x = Fraction(root.lo) if root.exact else root.interval()
        try:
            u0, u1, u2, e = (_eval(f, x) for f in (par.u0, par.u1, par.u2, par.e))
        except ZeroDivisionError:
            reason = "denominator vanishes"
            if root.exact:
                return RejectedRoot(root, branch, reason)
            u0 = None
        if u0 is not None:
            params = MetricParams(u0, u1, u2, Fraction(1), x)
            signs = [_positive(params.y(k)) for k in _blocks(d) if k != 3]
            if False in signs:
                return RejectedRoot(root, branch, "non-positive metric parameter")
            if None not in signs:
                res = residual_bound(d, params, e)
                if res <= threshold:
                    if root.exact and x == 1 and all(params.y(k) == 1 for k in _blocks(d)):
                        branch = BI_INVARIANT
                    return EinsteinSolution(d, params, e, branch, res, root)
                reason = f"residual {float(res):.3g} above threshold"
                if root.exact:
                    return RejectedRoot(root, branch, "extraneous root (nonzero residual)")
            else:
                reason = "sign undecided"
        if root.exact or root.width <= MIN_WIDTH:
            return RejectedRoot(root, branch, reason)
        root = refine(root, root.width / 10**4)


def _collect(res: SolveResult, d, par, poly, branch, width, seen) -> None:
    for root in positive_roots(poly):
        out = realise(d, par, root, branch, width=width)
        if isinstance(out, EinsteinSolution):
            key = out.x2.lo if out.x2.exact else None
            if key is not None and key in seen:
                continue
            if key is not None:
                seen.add(key)
            res.solutions.append(out)
        else:
            res.rejected.append(out)


def _bi_invariant(d: Decomposition) -> EinsteinSolution:
    one = Fraction(1)
    params = MetricParams(one, one, one, one, one)
    e = Fraction(1, 4)
    root = IsolatedRoot(one, one, Poly.from_roots([one]))
    return EinsteinSolution(d, params, e, BI_INVARIANT, residual_bound(d, params, e), root)


def _finish(res: SolveResult) -> SolveResult:
    if not any(s.branch == BI_INVARIANT for s in res.solutions):
        res.solutions.append(_bi_invariant(res.dims))
    order = {BI_INVARIANT: 0, NR_BRANCH: 1, GENERIC_BRANCH: 2}
    res.solutions.sort(key=lambda s: (order[s.branch], s.x2.lo))
    from .classify import classify

    for s in res.solutions:
        s.classification = classify(s, res.dims)
    return res


def solve_IIb(d: Decomposition, width: Fraction = START_WIDTH) -> SolveResult:
    if d.dtype != "IIb":
        raise ValueError(f"expected a type IIb decomposition, got {d.dtype}")
    res = SolveResult(d)
    gen = generic_parametrisation_IIb(d)
    nr = nr_parametrisation_IIb(d)
    res.polynomials["generic"] = _h2_equation_poly(d, gen)
    res.polynomials["naturally_reductive"] = _h2_equation_poly(d, nr)
    res.polynomials["singular_locus"] = singular_locus(d)
    seen: set[Fraction] = set()
    _collect(res, d, nr, res.polynomials["naturally_reductive"], NR_BRANCH, width, seen)
    _collect(res, d, gen, res.polynomials["generic"], GENERIC_BRANCH, width, seen)
    return _finish(res)


def solve_Ib(d: Decomposition, width: Fraction = START_WIDTH) -> SolveResult:
    split = branch_split_Ib(d)
    res = SolveResult(d)
    res.polynomials.update(
        naturally_reductive=split.quadratic, generic=split.octic, cofactor=split.cofactor,
        singular_locus=singular_locus(d),
    )
    par = ib_parametrisation(d)
    seen: set[Fraction] = set()
    _collect(res, d, par, split.quadratic, NR_BRANCH, width, seen)
    _collect(res, d, par, split.octic, GENERIC_BRANCH, width, seen)
    if split.cofactor.degree > 0:
        _collect(res, d, par, split.cofactor, GENERIC_BRANCH, width, seen)
        res.notes.append(f"cofactor {split.cofactor} checked")
    real = count_roots(split.octic)
    res.notes.append(f"generic factor has {real} real roots")
    return _finish(res)


def solve_Ia_IIa(d: Decomposition, width: Fraction = START_WIDTH) -> SolveResult:
    if d.dtype not in ("Ia", "IIa"):
        raise ValueError(f"expected a type Ia or IIa decomposition, got {d.dtype}")
    res = SolveResult(d)
    if not forced_relation_check(d):
        raise ArithmeticError(f"{d.group}: r0 = r4 does not force u0 = x2")
    res.notes.append("r0 = r4 forces u0 = x2 (identity in x2)")
    seen: set[Fraction] = set()
    if d.dtype == "Ia":
        par = _ia_parametrisation(d)
        poly = _h2_equation_poly(d, par)
    else:
        el = iia_elimination(d)
        u2 = el.common_u2()
        par = Parametrisation(X, el.alpha + el.beta * u2, u2, nr_einstein_constant(d))
        poly = _primitive(_numerator(el.resultant()))
    res.polynomials["naturally_reductive"] = poly
    _collect(res, d, par, poly, NR_BRANCH, width, seen)
    return _finish(res)


def solve(d: Decomposition, width: Fraction = START_WIDTH) -> SolveResult:
    if d.dtype == "IIb":
        return solve_IIb(d, width)
    if d.dtype == "Ib":
        return solve_Ib(d, width)
    return solve_Ia_IIa(d, width)
