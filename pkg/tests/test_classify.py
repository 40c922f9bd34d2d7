from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ib, iib
from lieeinstein.classify import (
    BI_INVARIANT,
    NOT_NR,
    NR_GXH,
    NR_GXK,
    Indeterminate,
    approx_equal,
    classify,
    generic_branch_is_nr_IIb,
)
from lieeinstein.flagdecomp import Decomposition
from lieeinstein.interval import Interval
from lieeinstein.ricci import MetricParams
from lieeinstein.solver import GENERIC_BRANCH, NR_BRANCH, solve


class _Sol:
    def __init__(self, dims, params):
        self.dims = dims
        self.params = params


def test_e7_ib_verdicts():
    res = solve(ib("E7"))
    verdicts = {s.branch: [] for s in res}
    for s in res:
        verdicts[s.branch].append(s.classification.verdict)
    assert verdicts[NR_BRANCH] == [NR_GXK]
    assert verdicts[GENERIC_BRANCH] == [NOT_NR, NOT_NR]
    assert res.solutions[0].classification.verdict == BI_INVARIANT


def test_generic_root_near_0_319422_is_not_nr():
    (s,) = [s for s in solve(ib("E7")).generic if abs(float(s.x2) - 0.319422) < 1e-5]
    assert not s.classification.naturally_reductive


@pytest.mark.parametrize("d", [iib("E6"), iib("B", 5, 3), iib("E7"), iib("C", 3, 2), iib("D", 9, 5)], ids=lambda d: d.group)
def test_nr_branch_identity(d):
    assert generic_branch_is_nr_IIb(d)


@pytest.mark.parametrize("d", [iib("E6"), iib("E7"), ib("E8"), iib("B", 6, 3)], ids=lambda d: d.group)
def test_branch_and_verdict_agree(d):
    for s in solve(d):
        if s.branch == GENERIC_BRANCH:
            assert s.classification.verdict == NOT_NR
        else:
            assert s.classification.naturally_reductive


@pytest.mark.parametrize("d", [iib("E6"), ib("E7")], ids=lambda d: d.group)
def test_verdict_is_scale_invariant(d):
    for s in solve(d):
        assert classify(s.rescaled_to_unit_e(), d).verdict == s.classification.verdict


def test_gxh_pattern():
    d = iib("E6")
    s = _Sol(d, MetricParams(F(2), F(3), F(5), F(7, 4), F(7, 4)))
    assert classify(s).verdict == NR_GXH


def test_gxk_pattern_needs_u1_when_h1_is_in_k():
    d = iib("E6")
    assert classify(_Sol(d, MetricParams(F(2), F(2), F(5), F(1), F(2)))).verdict == NR_GXK
    assert classify(_Sol(d, MetricParams(F(2), F(3), F(5), F(1), F(2)))).verdict == NOT_NR


def test_d4_two_ignores_u1():
    d = Decomposition.from_dims(3, 21, 28, 2, "IIa", "B5")
    assert classify(_Sol(d, MetricParams(F(2), F(3), F(5), F(1), F(2)))).verdict == NR_GXK


def test_approx_equal_on_intervals():
    a = Interval(F(1), F(1) + F(1, 10**12))
    assert approx_equal(a, F(1))
    assert not approx_equal(Interval(1, 2), Interval(3, 4))
    with pytest.raises(Indeterminate):
        approx_equal(Interval(1, 2), Interval(F(3, 2), 3))


@given(st.fractions(min_value=F(1, 100), max_value=100), st.fractions(min_value=F(1, 100), max_value=100))
def test_approx_equal_on_rationals(a, b):
    assert approx_equal(a, b) == (a == b)
