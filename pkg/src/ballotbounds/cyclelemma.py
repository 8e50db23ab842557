"""Cyclic-rotation machinery for the lower bounds.

Convention: *rotation by r* erases the first r votes and appends them, so
rotation by a+b is the identity. For a cute base sequence with partial sums
S', rotation by r is cute exactly when S'_r <= S'_t for every t > r.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import BallotSpec, RatioLike, VoteSequence, _as_sequence, parse_ratio, partial_sums, ratio_floor, scaled_partial_sums
from .enumeration import ExactCounts, count_rotation_totals, is_cute, is_desirable
from .errors import NotRotatableToCute, PreconditionViolation


def canonical_cute_rotation(seq, mu: RatioLike) -> tuple[int, VoteSequence]:
    """Rotate by the first index attaining min S_r; the result is cute."""
    seq = _as_sequence(seq)
    sums = scaled_partial_sums(seq, mu)
    if sums[-1] < 0:
        raise NotRotatableToCute(f"a - mu*b < 0 for {seq} (mu = {parse_ratio(mu)})")
    lo = min(sums)
    pivot = sums.index(lo) + 1
    return pivot, seq.rotate(pivot)


def cute_rotation_offsets(base, mu: RatioLike) -> frozenset[int]:
    """Offsets r in [1, a+b] whose rotation of the cute ``base`` is cute.

    Computed from the suffix-minimum condition on S', not by rotating.
    """
    base = _as_sequence(base)
    sums = scaled_partial_sums(base, mu)
    if any(s < 0 for s in sums):
        raise PreconditionViolation(f"{base} is not cute for mu = {parse_ratio(mu)}")
    offsets = set()
    later_min = None
    for r in range(len(sums), 0, -1):
        s = sums[r - 1]
        if later_min is None or s <= later_min:
            offsets.add(r)
        later_min = s if later_min is None else min(later_min, s)
    return frozenset(offsets)


def rotation_offsets_direct(seq, mu: RatioLike, predicate=is_cute) -> frozenset[int]:
    """Offsets whose rotation satisfies ``predicate``, by rotating and testing."""
    seq = _as_sequence(seq)
    mu = parse_ratio(mu)
    return frozenset(r for r in range(1, len(seq) + 1) if predicate(seq.rotate(r), mu))


@dataclass(frozen=True)
class RotationAnalysis:
    base_sequence: VoteSequence
    pivot_index: int
    prefix_sums: tuple
    cute_rotation_offsets: frozenset
    desirable_rotation_offsets: frozenset


def analyze_rotations(seq, mu: RatioLike) -> RotationAnalysis:
    mu = parse_ratio(mu)
    pivot, base = canonical_cute_rotation(seq, mu)
    return RotationAnalysis(
        base_sequence=base,
        pivot_index=pivot,
        prefix_sums=tuple(partial_sums(base, mu)),
        cute_rotation_offsets=cute_rotation_offsets(base, mu),
        desirable_rotation_offsets=rotation_offsets_direct(base, mu, is_desirable),
    )


def cute_offset_steps(prefix_sums, offsets) -> list[tuple[int, int, bool]]:
    """For consecutive cute offsets r_i < r_j check S'_{r_j} <= S'_{r_i} + 1."""
    rs = sorted(offsets)
    return [
        (r, s, prefix_sums[s - 1] <= prefix_sums[r - 1] + 1)
        for r, s in zip(rs, rs[1:])
    ]


def cute_rotation_bound(spec: BallotSpec) -> int | None:
    """floor(a - mu*b + 1), clamped to a+b; ``None`` when a < mu*b."""
    if spec.margin < 0:
        return None
    return min(ratio_floor(spec.margin + 1), spec.n)


def desirable_rotation_bound(spec: BallotSpec) -> int | None:
    """a - floor(mu*b); ``None`` unless a > mu*b."""
    if spec.margin <= 0:
        return None
    return min(spec.a - ratio_floor(spec.mu * spec.b), spec.n)


@dataclass(frozen=True)
class RotationCountReport:
    sequence: VoteSequence
    cute_rotations: int
    desirable_rotations: int
    cute_bound: int | None
    desirable_bound: int | None

    @property
    def passed(self) -> bool:
        ok_cute = self.cute_bound is None or self.cute_rotations >= self.cute_bound
        ok_des = self.desirable_bound is None or self.desirable_rotations >= self.desirable_bound
        return ok_cute and ok_des


def rotation_count_bounds_check(seq, spec: BallotSpec) -> RotationCountReport:
    """Count cute/desirable rotations of ``seq`` directly and compare with the bounds."""
    seq = _as_sequence(seq)
    if (seq.a, seq.b) != (spec.a, spec.b):
        raise PreconditionViolation(f"{seq} does not have a={spec.a}, b={spec.b}")
    rotations = [seq.rotate(r) for r in range(1, len(seq) + 1)]
    return RotationCountReport(
        sequence=seq,
        cute_rotations=sum(is_cute(s, spec.mu) for s in rotations),
        desirable_rotations=sum(is_desirable(s, spec.mu) for s in rotations),
        cute_bound=cute_rotation_bound(spec),
        desirable_bound=desirable_rotation_bound(spec),
    )


@dataclass(frozen=True)
class AveragingReport:
    counts: ExactCounts
    cute_rotation_sum: int
    desirable_rotation_sum: int
    n: int

    @property
    def passed(self) -> bool:
        return (
            self.cute_rotation_sum == self.n * self.counts.cute
            and self.desirable_rotation_sum == self.n * self.counts.desirable
        )


def rotation_average_identity_check(spec: BallotSpec, budget: int | None = None) -> AveragingReport:
    """Sum of cute (desirable) rotations over all sequences vs (a+b) * #cute (#desirable)."""
    counts, des_rot, cute_rot = count_rotation_totals(spec, budget)
    return AveragingReport(counts, cute_rot, des_rot, spec.n)

