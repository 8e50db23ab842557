# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Native enumeration kernels; same contract as ``_pykernel``.

Sequences are bitmasks (bit i set = A-vote at position i) walked with
Gosper's hack. Callers must ensure n <= 62 and n*max(up, down) < 2**62.
"""
from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64
ctypedef long long i64


cdef inline u64 _next_comb(u64 x) nogil:
    cdef u64 c = x & (~x + 1)
    cdef u64 r = x + c
    return (((r ^ x) >> 2) // c) | r


def count_walks(int a, int b, i64 up, i64 down):
    cdef int n = a + b
    cdef u64 x = (<u64>1 << a) - 1
    cdef u64 stop = <u64>1 << n
    cdef u64 total = 0, desirable = 0, cute = 0
    cdef i64 s, lo
    cdef int i
    with nogil:
        while x < stop:
            total += 1
            s = 0
            lo = 1
            for i in range(n):
                if (x >> i) & 1:
                    s += up
                else:
                    s -= down
                    if s < lo:
                        lo = s
                        if lo < 0:
                            break
            if lo >= 0:
                cute += 1
                if lo > 0:
                    desirable += 1
            if a == 0:
                break
            x = _next_comb(x)
    return total, desirable, cute


def count_rotations(int a, int b, i64 up, i64 down):
    cdef int n = a + b
    cdef u64 x = (<u64>1 << a) - 1
    cdef u64 stop = <u64>1 << n
    cdef u64 total = 0, desirable = 0, cute = 0, des_rot = 0, cute_rot = 0
    cdef i64 s, lo, m, last
    cdef int i
    cdef i64 *sums = <i64 *>malloc(3 * n * sizeof(i64))
    cdef i64 *pre = sums + n
    cdef i64 *suf = sums + 2 * n
    if sums == NULL:
        raise MemoryError()
    try:
        with nogil:
            while x < stop:
                total += 1
                s = 0
                for i in range(n):
                    if (x >> i) & 1:
                        s += up
                    else:
                        s -= down
                    sums[i] = s
                    if i == 0 or s < pre[i - 1]:
                        pre[i] = s
                    else:
                        pre[i] = pre[i - 1]
                last = sums[n - 1]
                if pre[n - 1] >= 0:
                    cute += 1
                    if pre[n - 1] > 0:
                        desirable += 1
                # suf[i] = min(sums[i+1:]); unused for i = n-1
                m = last
                for i in range(n - 2, -1, -1):
                    suf[i] = m
                    if sums[i] < m:
                        m = sums[i]
                for i in range(n):
                    lo = last - sums[i] + pre[i]
                    if i < n - 1 and suf[i] - sums[i] < lo:
                        lo = suf[i] - sums[i]
                    if lo >= 0:
                        cute_rot += 1
                        if lo > 0:
                            des_rot += 1
                if a == 0:
                    break
                x = _next_comb(x)
    finally:
        free(sums)
    return total, desirable, cute, des_rot, cute_rot
