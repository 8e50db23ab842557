from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ballotbounds.bounds import (
    BoundPair,
    classical_closed_forms,
    reflection_counting_check,
    theorem1_bounds,
    theorem2_bounds,
    tightness_scan,
    weighted_bounds,
)
from ballotbounds.core import BallotSpec, ratio_floor
from ballotbounds.enumeration import WeightedBallotSpec, count_exact
from ballotbounds.errors import DomainViolation

from conftest import MU_SET, grid

F = Fraction


@pytest.mark.parametrize("a, b, mu, lo, hi", [
    (5, 2, F(3, 2), F(2, 7), F(3, 7)),
    (3, 2, 1, F(1, 5), F(1, 5)),
    (1, 0, 5, F(1), F(1)),
])
def test_theorem1_examples(a, b, mu, lo, hi):
    assert theorem1_bounds(BallotSpec(a, b, mu)) == BoundPair(lo, hi)


@pytest.mark.parametrize("a, b, mu, lo, hi", [
    (5, 2, F(3, 2), F(3, 7), F(1, 2)),
    (2, 2, 1, F(1, 4), F(1, 3)),
    (1, 1, 1, F(1, 2), F(1, 2)),
    (3, 0, 2, F(1), F(1)),
])
def test_theorem2_examples(a, b, mu, lo, hi):
    assert theorem2_bounds(BallotSpec(a, b, mu)) == BoundPair(lo, hi)


def test_domain_guards():
    with pytest.raises(DomainViolation):
        theorem1_bounds(BallotSpec(2, 2, 1))      # a == mu*b
    with pytest.raises(DomainViolation):
        theorem2_bounds(BallotSpec(2, 3, 1))
    theorem2_bounds(BallotSpec(2, 2, 1))


def test_sandwich_small_grid():
    for a, b in grid(10):
        for mu in MU_SET:
            spec = BallotSpec(a, b, mu)
            c = count_exact(spec)
            if a > mu * b:
                assert theorem1_bounds(spec).contains(c.P)
            if a >= mu * b:
                assert theorem2_bounds(spec).contains(c.P_star)


@given(st.integers(0, 40), st.integers(0, 40), st.fractions(0, 6, max_denominator=9))
def test_floor_identity(a, b, mu):
    x = a - mu * b - 1
    lhs = ratio_floor(a - mu * b + 1)
    if x.denominator != 1:
        assert lhs == a - ratio_floor(mu * b)
    else:
        assert lhs == a - ratio_floor(mu * b) + 1


@given(st.integers(1, 30), st.integers(0, 10), st.integers(0, 4))
def test_integer_mu_collapse(a, b, m):
    if a > m * b:
        pair = theorem1_bounds(BallotSpec(a, b, m))
        assert pair.lower == pair.upper == F(a - m * b, a + b)


@given(st.integers(1, 30), st.integers(0, 10), st.fractions(0, 5, max_denominator=7))
def test_bound_pairs_ordered(a, b, mu):
    spec = BallotSpec(a, b, mu)
    if a > mu * b:
        p = theorem1_bounds(spec)
        assert 0 < p.lower <= p.upper <= 1
    if a >= mu * b:
        p = theorem2_bounds(spec)
        assert 0 < p.lower <= p.upper <= 1


@pytest.mark.parametrize("a, b, mu, p, p_star", [
    (3, 2, 1, F(1, 5), F(1, 2)),
    (5, 2, 2, F(1, 7), F(2, 6)),
    (2, 3, 1, F(0), F(0)),
])
def test_closed_form_examples(a, b, mu, p, p_star):
    cf = classical_closed_forms(BallotSpec(a, b, mu))
    assert (cf.P, cf.P_star) == (p, p_star)
    oracle = count_exact(BallotSpec(a, b, mu))
    assert (oracle.P, oracle.P_star) == (p, p_star)


def test_closed_forms_absent_for_fractional_mu():
    assert classical_closed_forms(BallotSpec(4, 2, F(3, 2))) is None


@pytest.mark.parametrize("a, weights, mu, lo, hi, iu", [
    (3, (2,), 1, F(1, 4), F(3, 4), F(1, 4)),
    (3, (1, 1), 1, F(1, 5), F(3, 5), F(1, 5)),
    (1, (), 7, F(1), F(1), F(1)),
    (3, (F(1, 2), F(3, 2)), 1, F(1, 5), F(3, 5), None),
    (1, (3,), 1, F(0), F(1, 2), F(-2, 2)),
])
def test_weighted_bound_examples(a, weights, mu, lo, hi, iu):
    wb = weighted_bounds(WeightedBallotSpec(a, weights, mu))
    assert (wb.lower, wb.upper, wb.integer_upper) == (lo, hi, iu)


def test_reflection_examples():
    spec = BallotSpec(5, 2, F(3, 2))
    rep = reflection_counting_check(spec, count_exact(spec))
    assert (rep.undesirable.lhs, rep.undesirable.rhs) == (14, 12)
    assert (rep.ugly.lhs, rep.ugly.rhs) == (12, F(21, 2))
    assert rep.passed

    spec = BallotSpec(3, 2, 1)
    rep = reflection_counting_check(spec, count_exact(spec))
    assert (rep.undesirable.lhs, rep.undesirable.rhs) == (8, 8) and rep.passed

    spec = BallotSpec(1, 0, 1)
    rep = reflection_counting_check(spec, count_exact(spec))
    assert rep.undesirable.rhs == 0 and rep.ugly.rhs == 0 and rep.passed


def test_reflection_inequalities_equal_theorem_upper_bounds():
    # each inequality, divided by C(a+b, a), is the matching upper bound
    for a, b in grid(10):
        for mu in MU_SET:
            spec = BallotSpec(a, b, mu)
            c = count_exact(spec)
            rep = reflection_counting_check(spec, c)
            if a > mu * b:
                assert (c.total - rep.undesirable.rhs) / c.total == theorem1_bounds(spec).upper
            if a >= mu * b:
                assert (c.total - rep.ugly.rhs) / c.total == theorem2_bounds(spec).upper


def test_tightness_scan_examples():
    (row,) = tightness_scan([5], [2], [F(3, 2)])
    assert row.tight["theorem2_lower"] and not row.tight["theorem2_upper"]
    (row,) = tightness_scan([3], [2], [1])
    # Theorem 2 lower is 2/5 here while P* = 1/2
    assert row.tight == {"theorem1_lower": True, "theorem1_upper": True,
                         "theorem2_lower": False, "theorem2_upper": True}
    (row,) = tightness_scan([1], [0], [1])
    assert row.P == row.P_star == 1 and all(row.tight.values())


def test_tightness_scan_budget_note():
    rows = list(tightness_scan([8], [8], [1], budget=100))
    assert rows[0].note.startswith("BudgetExceeded") and rows[0].P is None
    rows = list(tightness_scan(range(0, 3), range(0, 3), [1, 2]))
    assert len(rows) == 2 * 8
