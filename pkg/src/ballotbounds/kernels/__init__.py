"""Enumeration kernels with a native backend and a pure-Python fallback.

The Cython extension ``_ckernel`` is used when it was built and the
instance fits in 64-bit arithmetic; otherwise the pure-Python kernel runs.
Set ``BALLOT_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernel

try:
    if os.environ.get("BALLOT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend forced")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"

_LIMIT = 1 << 62


def _native(a, b, up, down):
    n = a + b
    return _ckernel is not None and n <= 62 and n * max(up, down, 1) < _LIMIT


def count_walks(a, b, up, down):
    """``(total, desirable, cute)`` for the walk with steps ``+up`` / ``-down``."""
    if _native(a, b, up, down):
        return _ckernel.count_walks(a, b, up, down)
    return _pykernel.count_walks(a, b, up, down)


def count_rotations(a, b, up, down):
    """``(total, desirable, cute, desirable_rotations, cute_rotations)``."""
    if _native(a, b, up, down):
        return _ckernel.count_rotations(a, b, up, down)
    return _pykernel.count_rotations(a, b, up, down)


__all__ = ["BACKEND", "count_walks", "count_rotations"]
