"""Seeded sampling estimates of P and P* for instances too large to enumerate.

Randomness: numpy ``Generator(PCG64)`` seeded through ``SeedSequence``.
With ``workers > 1`` the master ``SeedSequence(seed)`` is spawned into one
child per worker; worker i draws ``n // workers`` samples, plus one if
``i < n % workers``. Results depend on (spec, n, seed, workers) only.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import BallotSpec
from .errors import PreconditionViolation

# cap on elements per sampled block
_BLOCK_ELEMENTS = 1 << 22
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class SampleEstimate:
    p_hat: float
    p_star_hat: float
    n: int
    std_err_p: float
    std_err_p_star: float
    seed: int
    desirable: int
    cute: int
    workers: int = 1


def _std_err(p: float, n: int) -> float:
    return math.sqrt(p * (1.0 - p) / n)


def _classify_block(rng: np.random.Generator, base: np.ndarray, rows: int) -> tuple[int, int]:
    steps = rng.permuted(np.broadcast_to(base, (rows, base.size)), axis=1)
    lo = np.cumsum(steps, axis=1).min(axis=1)
    return int(np.count_nonzero(lo > 0)), int(np.count_nonzero(lo >= 0))


def _classify_block_exact(rng: np.random.Generator, base: list, rows: int) -> tuple[int, int]:
    # Python ints: used only when scaled sums could overflow int64
    desirable = cute = 0
    idx = np.arange(len(base))
    for _ in range(rows):
        s = 0
        lo = None
        for i in rng.permutation(idx):
            s += base[i]
            lo = s if lo is None else min(lo, s)
        desirable += lo > 0
        cute += lo >= 0
    return desirable, cute


def _run_worker(spec: BallotSpec, count: int, seed_seq: np.random.SeedSequence) -> tuple[int, int]:
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    up, down = spec.mu.denominator, spec.mu.numerator
    n = spec.n
    if count == 0:
        return 0, 0
    if n * max(up, down) >= _INT64_SAFE:
        return _classify_block_exact(rng, [up] * spec.a + [-down] * spec.b, count)
    base = np.array([up] * spec.a + [-down] * spec.b, dtype=np.int64)
    rows = max(1, _BLOCK_ELEMENTS // n)
    desirable = cute = 0
    done = 0
    while done < count:
        k = min(rows, count - done)
        d, c = _classify_block(rng, base, k)
        desirable += d
        cute += c
        done += k
    return desirable, cute


def sample_probability(spec: BallotSpec, n: int, seed: int, workers: int = 1) -> SampleEstimate:
    """Estimate P and P* from ``n`` uniformly shuffled counting orders."""
    if n < 1:
        raise PreconditionViolation("sample count must be positive")
    if workers < 1:
        raise PreconditionViolation("workers must be positive")
    master = np.random.SeedSequence(seed)
    if workers == 1:
        desirable, cute = _run_worker(spec, n, master)
    else:
        children = master.spawn(workers)
        shares = [n // workers + (i < n % workers) for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda args: _run_worker(spec, *args), zip(shares, children)))
        desirable = sum(d for d, _ in parts)
        cute = sum(c for _, c in parts)
    p_hat = desirable / n
    p_star_hat = cute / n
    return SampleEstimate(
        p_hat=p_hat,
        p_star_hat=p_star_hat,
        n=n,
        std_err_p=_std_err(p_hat, n),
        std_err_p_star=_std_err(p_star_hat, n),
        seed=seed,
        desirable=desirable,
        cute=cute,
        workers=workers,
    )
