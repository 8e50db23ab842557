from fractions import Fraction

import pytest

from ballotbounds.core import BallotSpec
from ballotbounds.errors import PreconditionViolation
from ballotbounds.montecarlo import _INT64_SAFE, sample_probability


def test_single_sequence_is_exact():
    est = sample_probability(BallotSpec(1, 0, 1), 100, 42)
    assert est.p_hat == 1.0 and est.p_star_hat == 1.0 and est.std_err_p == 0.0


@pytest.mark.parametrize("a, b, mu, attr, value", [
    (5, 2, Fraction(3, 2), "p_hat", Fraction(1, 3)),
    (2, 2, 1, "p_star_hat", Fraction(1, 3)),
])
def test_estimates_near_oracle(a, b, mu, attr, value):
    est = sample_probability(BallotSpec(a, b, mu), 100_000, 7)
    err = est.std_err_p if attr == "p_hat" else est.std_err_p_star
    assert abs(getattr(est, attr) - float(value)) <= 3 * err


def test_deterministic_for_seed_and_workers():
    spec = BallotSpec(9, 5, Fraction(4, 3))
    assert sample_probability(spec, 5000, 3) == sample_probability(spec, 5000, 3)
    assert sample_probability(spec, 5001, 3, workers=4) == sample_probability(spec, 5001, 3, workers=4)
    assert sample_probability(spec, 5000, 3) != sample_probability(spec, 5000, 4)


def test_worker_split_counts_all_samples():
    est = sample_probability(BallotSpec(3, 2, 1), 1003, 1, workers=4)
    assert est.n == 1003 and est.workers == 4
    assert 0 <= est.desirable <= est.cute <= 1003


def test_desirable_implies_cute_per_run():
    for seed in range(10):
        est = sample_probability(BallotSpec(6, 3, Fraction(5, 3)), 2000, seed)
        assert est.desirable <= est.cute
        assert est.p_hat <= est.p_star_hat


def test_large_instance_runs():
    est = sample_probability(BallotSpec(400, 150, Fraction(5, 2)), 2000, 11)
    assert 0 <= est.p_hat <= est.p_star_hat <= 1


def test_exact_path_for_huge_denominators():
    mu = Fraction(3 * 10**20 + 1, 2 * 10**20)
    spec = BallotSpec(5, 2, mu)
    assert spec.n * max(mu.numerator, mu.denominator) >= _INT64_SAFE
    est = sample_probability(spec, 3000, 5)
    # mu just above 3/2: P(5,2,mu) = 1/3 (no prefix sits exactly on the line here)
    assert abs(est.p_hat - 1 / 3) <= 4 * est.std_err_p


def test_bad_arguments():
    with pytest.raises(PreconditionViolation):
        sample_probability(BallotSpec(1, 1, 1), 0, 1)
    with pytest.raises(PreconditionViolation):
        sample_probability(BallotSpec(1, 1, 1), 10, 1, workers=0)
