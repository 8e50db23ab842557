"""Exact rationals, problem instances, vote sequences and partial tallies.

Rationals are :class:`fractions.Fraction`; nothing in the counting path
touches a float.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import ParseError

Ratio = Fraction
RatioLike = Union[Fraction, int, str]

_VOTES = frozenset("AB")


def parse_ratio(text: RatioLike) -> Fraction:
    """Parse ``"p/q"``, an integer, or a finite decimal such as ``"1.5"`` exactly."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"cannot parse {text!r} as a rational")
    try:
        # Fraction parses decimal literals exactly; rejects inf/nan.
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse {text!r} as a rational") from exc


def format_ratio(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ratio_floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def ratio_ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class BallotSpec:
    a: int
    b: int
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", parse_ratio(self.mu))
        if self.a < 0 or self.b < 0:
            raise ParseError("vote counts must be nonnegative")
        if self.a + self.b < 1:
            raise ParseError("need at least one vote (a + b >= 1)")
        if self.mu < 0:
            raise ParseError("mu must be nonnegative")

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def margin(self) -> Fraction:
        """Final weighted partial sum a - mu*b."""
        return self.a - self.mu * self.b

    def __str__(self) -> str:
        return f"a={self.a} b={self.b} mu={format_ratio(self.mu)}"


@dataclass(frozen=True)
class VoteSequence:
    """Counting order as a string over ``{A, B}``; position r is 1-based."""

    votes: str

    def __post_init__(self):
        if not isinstance(self.votes, str) or not set(self.votes) <= _VOTES:
            raise ParseError(f"vote sequence must be a string over {{A, B}}: {self.votes!r}")

    @classmethod
    def parse(cls, text: str) -> "VoteSequence":
        return cls(text.strip().upper())

    @classmethod
    def from_positions(cls, n: int, a_positions) -> "VoteSequence":
        """Build from the 0-based positions of the A-votes."""
        chars = ["B"] * n
        for i in a_positions:
            chars[i] = "A"
        return cls("".join(chars))

    @property
    def a(self) -> int:
        return self.votes.count("A")

    @property
    def b(self) -> int:
        return self.votes.count("B")

    def rotate(self, r: int) -> "VoteSequence":
        """Move the first ``r`` votes to the end."""
        r %= max(len(self.votes), 1)
        return VoteSequence(self.votes[r:] + self.votes[:r])

    def spec(self, mu: RatioLike) -> BallotSpec:
        return BallotSpec(self.a, self.b, parse_ratio(mu))

    def __len__(self) -> int:
        return len(self.votes)

    def __iter__(self):
        return iter(self.votes)

    def __str__(self) -> str:
        return self.votes


class PartialTally(NamedTuple):
    r: int
    a_r: int
    b_r: int
    S_r: Fraction


def _as_sequence(seq) -> VoteSequence:
    return seq if isinstance(seq, VoteSequence) else VoteSequence.parse(seq)


def partial_tallies(seq, mu: RatioLike) -> list[PartialTally]:
    """Running tallies with the weighted partial sum ``S_r = a_r - mu*b_r``."""
    seq = _as_sequence(seq)
    if not len(seq):
        raise ParseError("empty vote sequence")
    mu = parse_ratio(mu)
    out = []
    a_r = b_r = 0
    for r, v in enumerate(seq, start=1):
        if v == "A":
            a_r += 1
        else:
            b_r += 1
        out.append(PartialTally(r, a_r, b_r, a_r - mu * b_r))
    return out


def partial_sums(seq, mu: RatioLike) -> list[Fraction]:
    return [t.S_r for t in partial_tallies(seq, mu)]


def scaled_partial_sums(seq, mu: RatioLike) -> list[int]:
    """``q * S_r`` for mu = p/q: integer walk with the same signs and order as S_r."""
    seq = _as_sequence(seq)
    mu = parse_ratio(mu)
    up, down = mu.denominator, mu.numerator
    out = []
    s = 0
    for v in seq.votes:
        s += up if v == "A" else -down
        out.append(s)
    return out
