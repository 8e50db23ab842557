"""Pure-Python enumeration kernels.

All kernels work on the integer walk obtained by scaling S_r by the
denominator q of mu = p/q: an A-vote steps by ``up = q`` and a B-vote by
``-down = -p``. Sequences are visited in lexicographic order of A-positions.
"""
from itertools import combinations


def _walk(n, a_positions, up, down):
    steps = [-down] * n
    for i in a_positions:
        steps[i] = up
    s = 0
    sums = []
    for d in steps:
        s += d
        sums.append(s)
    return sums


def count_walks(a, b, up, down):
    """Return ``(total, desirable, cute)`` over all C(a+b, a) sequences."""
    n = a + b
    total = desirable = cute = 0
    for pos in combinations(range(n), a):
        total += 1
        lo = min(_walk(n, pos, up, down))
        if lo >= 0:
            cute += 1
            if lo > 0:
                desirable += 1
    return total, desirable, cute


def rotation_flags(sums):
    """Per-offset (desirable, cute) flags for rotations by r = 1..n.

    Rotation by r has partial sums S_{r+j} - S_r (j <= n-r) followed by
    S_n - S_r + S_j (j <= r).
    """
    n = len(sums)
    pre = [0] * n
    suf = [0] * n
    m = sums[0]
    for i in range(n):
        m = min(m, sums[i])
        pre[i] = m
    m = None
    for i in range(n - 1, -1, -1):
        suf[i] = m
        m = sums[i] if m is None else min(m, sums[i])
    last = sums[-1]
    out = []
    for i in range(n):
        lo = last - sums[i] + pre[i]
        if suf[i] is not None:
            lo = min(lo, suf[i] - sums[i])
        out.append((lo > 0, lo >= 0))
    return out


def count_rotations(a, b, up, down):
    """Return ``(total, desirable, cute, desirable_rotations, cute_rotations)``.

    The last two sum, over every sequence, the number of its a+b rotations
    that are desirable (resp. cute).
    """
    n = a + b
    total = desirable = cute = des_rot = cute_rot = 0
    for pos in combinations(range(n), a):
        total += 1
        sums = _walk(n, pos, up, down)
        lo = min(sums)
        if lo >= 0:
            cute += 1
            if lo > 0:
                desirable += 1
        for d, c in rotation_flags(sums):
            des_rot += d
            cute_rot += c
    return total, desirable, cute, des_rot, cute_rot
