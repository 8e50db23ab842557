"""Exact evaluation of Takacs' series for P.

The coefficients C_j are fixed by C_0 = 1 and, for every k >= 1,

    sum_{j=0}^{k} C_j * C(k, j) / C(floor(k*mu) + k - 1, j) == 0.

The k-th instance is linear in C_k, so coefficients are solved in order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import BallotSpec, RatioLike, binomial, parse_ratio, ratio_floor
from .errors import DegenerateRecurrence, PreconditionViolation


def _row(mu: Fraction, k: int) -> int:
    return ratio_floor(k * mu) + k - 1


@dataclass(frozen=True)
class TakacsCoefficients:
    mu: Fraction
    values: tuple

    def residual(self, k: int) -> Fraction:
        """Left-hand side of the k-th recurrence instance (0 when solved)."""
        top = _row(self.mu, k)
        return sum(
            (self.values[j] * Fraction(binomial(k, j), binomial(top, j)) for j in range(k + 1)),
            Fraction(0),
        )

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j):
        return self.values[j]


@lru_cache(maxsize=256)
def _solve(mu: Fraction, m: int) -> tuple:
    values = [Fraction(1)]
    for k in range(1, m + 1):
        top = _row(mu, k)
        if top < k:
            raise DegenerateRecurrence(
                f"floor({k}*mu) = 0 for mu = {mu}: C({top}, {k}) = 0, recurrence has no "
                "solution for C_k (requires mu >= 1); use the enumeration oracle"
            )
        partial = sum(
            (values[j] * Fraction(binomial(k, j), binomial(top, j)) for j in range(k)),
            Fraction(0),
        )
        values.append(-partial * binomial(top, k))
    return tuple(values)


def takacs_coefficients(mu: RatioLike, m: int) -> TakacsCoefficients:
    mu = parse_ratio(mu)
    if m < 0:
        raise PreconditionViolation("m must be nonnegative")
    return TakacsCoefficients(mu, _solve(mu, m))


def takacs_probability(spec: BallotSpec) -> Fraction:
    """P = a/(a+b) * sum_{j=0}^{b} C_j * C(b, j) / C(a+b-1, j)."""
    if spec.a < 1:
        raise PreconditionViolation("Takacs series needs a >= 1")
    coeffs = takacs_coefficients(spec.mu, spec.b)
    top = spec.n - 1
    series = sum(
        (coeffs[j] * Fraction(binomial(spec.b, j), binomial(top, j)) for j in range(spec.b + 1)),
        Fraction(0),
    )
    return Fraction(spec.a, spec.n) * series
