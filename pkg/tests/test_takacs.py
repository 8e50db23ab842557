from fractions import Fraction

import pytest

from ballotbounds.core import BallotSpec
from ballotbounds.enumeration import count_exact
from ballotbounds.errors import DegenerateRecurrence, PreconditionViolation
from ballotbounds.takacs import takacs_coefficients, takacs_probability

from conftest import MU_SET, grid


@pytest.mark.parametrize("mu, m, expected", [
    (2, 2, [1, -2, -2]),
    (Fraction(3, 2), 2, [1, -1, -3]),
    (Fraction(7, 3), 0, [1]),
    (1, 0, [1]),
])
def test_coefficient_examples(mu, m, expected):
    assert list(takacs_coefficients(mu, m).values) == expected


@pytest.mark.parametrize("mu", MU_SET + [Fraction(11, 4), Fraction(10)])
def test_residuals_vanish(mu):
    coeffs = takacs_coefficients(mu, 15)
    assert coeffs[0] == 1
    assert all(coeffs.residual(k) == 0 for k in range(1, 16))


@pytest.mark.parametrize("a, b, mu, p", [
    (5, 2, 2, Fraction(1, 7)),
    (5, 2, Fraction(3, 2), Fraction(1, 3)),
    (1, 0, 1, Fraction(1)),
    (1, 0, Fraction(5, 2), Fraction(1)),
])
def test_probability_examples(a, b, mu, p):
    assert takacs_probability(BallotSpec(a, b, mu)) == p


def test_matches_oracle_when_a_exceeds_mu_b():
    for a, b in grid(12):
        if a < 1:
            continue
        for mu in MU_SET:
            spec = BallotSpec(a, b, mu)
            if a > mu * b:
                assert takacs_probability(spec) == count_exact(spec).P, spec


@pytest.mark.parametrize("m", [1, 2, 3])
def test_integer_mu_closed_form(m):
    for a, b in grid(14):
        if a > m * b:
            assert takacs_probability(BallotSpec(a, b, m)) == Fraction(a - m * b, a + b)


@pytest.mark.parametrize("mu", [Fraction(1, 2), Fraction(0), Fraction(99, 100)])
def test_degenerate_below_one(mu):
    with pytest.raises(DegenerateRecurrence):
        takacs_coefficients(mu, 1)
    with pytest.raises(DegenerateRecurrence):
        takacs_probability(BallotSpec(5, 2, mu))
    # m = 0 never touches the recurrence
    assert list(takacs_coefficients(mu, 0).values) == [1]


def test_requires_a_votes():
    with pytest.raises(PreconditionViolation):
        takacs_probability(BallotSpec(0, 3, 1))


def test_cache_is_transparent():
    first = takacs_coefficients("5/2", 10)
    again = takacs_coefficients(Fraction(10, 4), 10)
    prefix = takacs_coefficients("5/2", 4)
    assert first == again
    assert prefix.values == first.values[:5]
