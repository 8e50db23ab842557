"""Theorem bounds, classical closed forms, weighted bounds, reflection counts."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .core import BallotSpec, binomial, parse_ratio, ratio_floor
from .enumeration import ExactCounts, WeightedBallotSpec, count_exact
from .errors import BudgetExceeded, DomainViolation


@dataclass(frozen=True)
class BoundPair:
    lower: Fraction
    upper: Fraction

    def contains(self, x: Fraction) -> bool:
        return self.lower <= x <= self.upper


def theorem1_bounds(spec: BallotSpec) -> BoundPair:
    """(a - floor(mu*b))/(a+b) <= P <= (a - floor(mu)*b)/(a+b), for a > mu*b."""
    a, b, mu = spec.a, spec.b, spec.mu
    if not a > mu * b:
        raise DomainViolation(f"Theorem 1 bounds need a > mu*b ({spec})")
    return BoundPair(
        Fraction(a - ratio_floor(mu * b), a + b),
        Fraction(a - ratio_floor(mu) * b, a + b),
    )


def theorem2_bounds(spec: BallotSpec) -> BoundPair:
    """floor(a - mu*b + 1)/(a+b) <= P* <= (a + 1 - mu*b)/(a+1), for a >= mu*b.

    The cute-rotation count in the lower bound is capped at a+b, which only
    matters for b = 0 (otherwise the bound would read (a+1)/a).
    """
    a, b, mu = spec.a, spec.b, spec.mu
    if not a >= mu * b:
        raise DomainViolation(f"Theorem 2 bounds need a >= mu*b ({spec})")
    return BoundPair(
        Fraction(min(ratio_floor(a - mu * b + 1), a + b), a + b),
        (a + 1 - mu * b) / (a + 1),
    )


@dataclass(frozen=True)
class ClosedForms:
    P: Fraction
    P_star: Fraction


def classical_closed_forms(spec: BallotSpec) -> Optional[ClosedForms]:
    """Andre/Barbier and Aeppli formulas; ``None`` unless mu is an integer."""
    mu = spec.mu
    if mu.denominator != 1:
        return None
    a, b = spec.a, spec.b
    m = mu.numerator
    p = Fraction(a - m * b, a + b) if a > m * b else Fraction(0)
    p_star = Fraction(a - m * b + 1, a + 1) if a >= m * b else Fraction(0)
    return ClosedForms(p, p_star)


@dataclass(frozen=True)
class WeightedBounds(BoundPair):
    # (a - floor(mu)*b)/(a+b') when mu and every weight are integers
    integer_upper: Optional[Fraction] = None


def weighted_bounds(wspec: WeightedBallotSpec) -> WeightedBounds:
    a, bp, b, mu = wspec.a, wspec.b_prime, wspec.b, wspec.mu
    lower = max(Fraction(0), Fraction(a - ratio_floor(mu * b), a + bp))
    upper = Fraction(a, a + bp)
    integer_upper = None
    if mu.denominator == 1 and all(w.denominator == 1 for w in wspec.weights):
        integer_upper = Fraction(a - mu.numerator * int(b), a + bp)
    return WeightedBounds(lower, upper, integer_upper)


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    applicable: bool
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return not self.applicable or self.lhs >= self.rhs

    @property
    def ratio(self) -> Optional[Fraction]:
        """lhs / rhs, to expose how far the inequality is from tight."""
        return self.lhs / self.rhs if self.rhs else None


@dataclass(frozen=True)
class ReflectionReport:
    undesirable: InequalityCheck
    ugly: InequalityCheck

    @property
    def passed(self) -> bool:
        return self.undesirable.passed and self.ugly.passed


def reflection_counting_check(spec: BallotSpec, counts: ExactCounts) -> ReflectionReport:
    """Check the two pseudo-reflection counting inequalities against oracle counts.

    (i)  undesirable >= (floor(mu) + 1) * C(a+b-1, b-1)   when a > mu*b
    (ii) ugly        >= mu * C(a+b, b-1)                  when a >= mu*b
    """
    a, b, mu = spec.a, spec.b, spec.mu
    first = InequalityCheck(
        "undesirable",
        a > mu * b,
        Fraction(counts.undesirable),
        Fraction((ratio_floor(mu) + 1) * binomial(a + b - 1, b - 1)),
    )
    second = InequalityCheck(
        "ugly",
        a >= mu * b,
        Fraction(counts.ugly),
        mu * binomial(a + b, b - 1),
    )
    return ReflectionReport(first, second)


@dataclass
class ScanRow:
    spec: BallotSpec
    P: Optional[Fraction] = None
    P_star: Optional[Fraction] = None
    theorem1: Optional[BoundPair] = None
    theorem2: Optional[BoundPair] = None
    closed: Optional[ClosedForms] = None
    tight: dict = field(default_factory=dict)
    note: Optional[str] = None


def _tight_flags(p, p_star, t1, t2) -> dict:
    flags = {}
    if t1 is not None:
        flags["theorem1_lower"] = p == t1.lower
        flags["theorem1_upper"] = p == t1.upper
    if t2 is not None:
        flags["theorem2_lower"] = p_star == t2.lower
        flags["theorem2_upper"] = p_star == t2.upper
    return flags


def tightness_scan(
    a_range: Iterable[int],
    b_range: Iterable[int],
    mu_set: Iterable,
    budget: int | None = None,
):
    """Yield a :class:`ScanRow` per instance, flagging exact equality with each bound.

    Instances over budget are yielded with ``note`` set and no values.
    """
    mus = [parse_ratio(m) for m in mu_set]
    b_values = list(b_range)
    for a in a_range:
        for b in b_values:
            if a + b < 1:
                continue
            for mu in mus:
                spec = BallotSpec(a, b, mu)
                row = ScanRow(spec)
                try:
                    counts = count_exact(spec, budget)
                except BudgetExceeded as exc:
                    row.note = f"BudgetExceeded: {exc}"
                    yield row
                    continue
                row.P, row.P_star = counts.P, counts.P_star
                if a > mu * b:
                    row.theorem1 = theorem1_bounds(spec)
                if a >= mu * b:
                    row.theorem2 = theorem2_bounds(spec)
                row.closed = classical_closed_forms(spec)
                row.tight = _tight_flags(row.P, row.P_star, row.theorem1, row.theorem2)
                yield row
