"""Time the Cython and pure-Python enumeration kernels on the same instances.

    python benchmarks/bench_kernels.py [--repeat 3] [--max-python 200000]
"""
import argparse
import time
from fractions import Fraction

from ballotbounds import kernels
from ballotbounds.core import binomial
from ballotbounds.kernels import _pykernel

CASES = [(7, 7, Fraction(1)), (10, 8, Fraction(3, 2)), (12, 10, Fraction(5, 3)), (15, 12, Fraction(7, 3))]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-python", type=int, default=200_000,
                    help="skip the Python kernel above this many sequences")
    args = ap.parse_args()
    if kernels._ckernel is None:
        print("Cython kernel not built; only the Python kernel is timed")
    print(f"{'kernel':16} {'a':>3} {'b':>3} {'mu':>5} {'sequences':>12} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for a, b, mu in CASES:
        up, down = mu.denominator, mu.numerator
        size = binomial(a + b, a)
        for name in ("count_walks", "count_rotations"):
            c_time = p_time = None
            if kernels._ckernel is not None:
                c_time, c_out = best_of(lambda: getattr(kernels._ckernel, name)(a, b, up, down), args.repeat)
            if size <= args.max_python:
                p_time, p_out = best_of(lambda: getattr(_pykernel, name)(a, b, up, down), 1)
                if c_time is not None:
                    assert tuple(c_out) == tuple(p_out), (name, a, b, mu)
            fmt = lambda t: f"{t:10.4f}" if t is not None else f"{'-':>10}"
            speed = f"{p_time / c_time:8.1f}" if c_time and p_time else f"{'-':>8}"
            print(f"{name:16} {a:3} {b:3} {str(mu):>5} {size:12d} {fmt(c_time)} {fmt(p_time)} {speed}")


if __name__ == "__main__":
    main()
