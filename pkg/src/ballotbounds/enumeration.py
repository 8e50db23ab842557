"""Brute-force oracle: classify every counting order of an instance.

The oracle never uses a closed form. It walks every sequence, which is
what makes it a fair referee for the formulas and bounds elsewhere.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from . import kernels
from .core import BallotSpec, RatioLike, VoteSequence, binomial, parse_ratio, scaled_partial_sums
from .errors import BudgetExceeded, ParseError

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "BALLOT_ENUM_BUDGET"


def enumeration_budget(budget: int | None = None) -> int:
    """Explicit argument, else ``$BALLOT_ENUM_BUDGET``, else 10**7."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"{BUDGET_ENV} must be an integer, got {env!r}") from exc
    return DEFAULT_BUDGET


def _check_budget(size: int, budget: int | None) -> None:
    limit = enumeration_budget(budget)
    if size > limit:
        raise BudgetExceeded(
            f"{size} sequences exceed the enumeration budget of {limit}; "
            "use sampling or the bound formulas instead"
        )


@dataclass(frozen=True)
class ExactCounts:
    total: int
    desirable: int
    cute: int

    @property
    def P(self) -> Fraction:
        return Fraction(self.desirable, self.total)

    @property
    def P_star(self) -> Fraction:
        return Fraction(self.cute, self.total)

    @property
    def undesirable(self) -> int:
        return self.total - self.desirable

    @property
    def ugly(self) -> int:
        return self.total - self.cute


def is_desirable(seq, mu: RatioLike) -> bool:
    """True iff ``a_r > mu*b_r`` at every prefix, the full count included."""
    return all(s > 0 for s in scaled_partial_sums(seq, mu))


def is_cute(seq, mu: RatioLike) -> bool:
    return all(s >= 0 for s in scaled_partial_sums(seq, mu))


def iter_sequences(a: int, b: int) -> Iterator[VoteSequence]:
    """All C(a+b, a) sequences, lexicographic in the A-positions."""
    n = a + b
    for pos in combinations(range(n), a):
        yield VoteSequence.from_positions(n, pos)


def _steps(mu: Fraction) -> tuple[int, int]:
    # S_r * q moves by +q on A and -p on B
    return mu.denominator, mu.numerator


def count_exact(spec: BallotSpec, budget: int | None = None) -> ExactCounts:
    _check_budget(binomial(spec.n, spec.a), budget)
    up, down = _steps(spec.mu)
    total, desirable, cute = kernels.count_walks(spec.a, spec.b, up, down)
    return ExactCounts(total, desirable, cute)


def count_rotation_totals(spec: BallotSpec, budget: int | None = None) -> tuple[ExactCounts, int, int]:
    """Oracle counts plus the desirable and cute rotation counts summed over all sequences."""
    _check_budget(binomial(spec.n, spec.a), budget)
    up, down = _steps(spec.mu)
    total, desirable, cute, des_rot, cute_rot = kernels.count_rotations(spec.a, spec.b, up, down)
    return ExactCounts(total, desirable, cute), des_rot, cute_rot


def count_exact_slow(spec: BallotSpec) -> ExactCounts:
    """Reference path through :func:`is_desirable` / :func:`is_cute`, for cross-checks."""
    total = desirable = cute = 0
    for seq in iter_sequences(spec.a, spec.b):
        total += 1
        desirable += is_desirable(seq, spec.mu)
        cute += is_cute(seq, spec.mu)
    return ExactCounts(total, desirable, cute)


# -- weighted variant ------------------------------------------------------


@dataclass(frozen=True)
class WeightedBallotSpec:
    """A casts ``a`` unit votes; B casts one vote per entry of ``weights``."""

    a: int
    weights: tuple
    mu: Fraction

    def __post_init__(self):
        ws = tuple(sorted(parse_ratio(w) for w in self.weights))
        if any(w <= 0 for w in ws):
            raise ParseError("weights must be positive")
        if self.a < 0:
            raise ParseError("a must be nonnegative")
        if self.a + len(ws) < 1:
            raise ParseError("need at least one vote")
        mu = parse_ratio(self.mu)
        if mu < 0:
            raise ParseError("mu must be nonnegative")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "mu", mu)

    @property
    def b_prime(self) -> int:
        return len(self.weights)

    @property
    def b(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def arrangement_count(self) -> int:
        """Number of distinct arrangements (multinomial coefficient)."""
        n = self.a + self.b_prime
        out = math.factorial(n) // math.factorial(self.a)
        for m in Counter(self.weights).values():
            out //= math.factorial(m)
        return out


def _distinct_orders(items: list) -> Iterator[tuple]:
    """Distinct permutations of a sorted list, in lexicographic order."""
    items = sorted(items)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


def iter_arrangements(a: int, weights: Sequence[Fraction]) -> Iterator[tuple]:
    """Distinct arrangements of ``a`` A-votes and the B-weights.

    Items are ``None`` for an A-vote, else the weight. Order: B-position
    sets lexicographically, then distinct weight orders lexicographically.
    """
    n = a + len(weights)
    orders = list(_distinct_orders(list(weights)))
    for pos in combinations(range(n), len(weights)):
        for order in orders:
            arr: list = [None] * n
            for i, w in zip(pos, order):
                arr[i] = w
            yield tuple(arr)


def _weighted_steps(wspec: WeightedBallotSpec) -> tuple[int, dict]:
    """Integer step for an A-vote and per-weight B-steps, all scaled by one common denominator."""
    scale = wspec.mu.denominator
    for w in set(wspec.weights):
        scale = math.lcm(scale, (wspec.mu * w).denominator)
    return scale, {w: int(wspec.mu * w * scale) for w in set(wspec.weights)}


def _weighted_status(arr, up: int, down: dict) -> tuple[bool, bool]:
    s = 0
    desirable = True
    for item in arr:
        s += up if item is None else -down[item]
        if s <= 0:
            desirable = False
            if s < 0:
                return False, False
    return desirable, True


def count_exact_weighted(wspec: WeightedBallotSpec, budget: int | None = None) -> ExactCounts:
    """Oracle for the weighted variant, counted over distinct arrangements.

    With distinguishable votes every distinct arrangement is produced by the
    same number ``a! * prod(m_w!)`` of labelled orders, so counting distinct
    arrangements gives the same probabilities as the labelled model.
    """
    _check_budget(wspec.arrangement_count(), budget)
    up, down = _weighted_steps(wspec)
    total = desirable = cute = 0
    for arr in iter_arrangements(wspec.a, wspec.weights):
        d, c = _weighted_status(arr, up, down)
        total += 1
        desirable += d
        cute += c
    return ExactCounts(total, desirable, cute)
