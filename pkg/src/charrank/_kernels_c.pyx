# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled counting kernels.

Same contract as ``_kernels_py``; ``_dispatch`` picks whichever imports.
Counts stay exact: the unsigned-64 fast path only runs when every table
entry provably fits.  Each entry is a partition count of weight at most
the target weight, hence at most p(weight), and p(416) < 2**64 <= p(417),
so weights up to 416 are safe.  Larger inputs delegate to the pure-Python
kernels and their big integers.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

from charrank import _kernels_py

BACKEND = "cython"

# Largest weight for which every dynamic-programming entry fits in uint64.
U64_SAFE_WEIGHT = 416


cdef uint64_t *_zeroed(size_t entries) except NULL:
    cdef uint64_t *buf = <uint64_t *> calloc(entries, sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef object _box_last_row(int a, int b, int top, int want):
    """Run the boxed-partition DP and return either the entry at weight
    ``want`` (want >= 0) or the whole last row (want < 0)."""
    cdef int width = top + 1
    cdef uint64_t *table = _zeroed(<size_t> (b + 1) * width)
    cdef int v, p, w, base, below
    cdef object out
    try:
        for p in range(b + 1):
            table[p * width] = 1
        for v in range(1, a + 1):
            for p in range(1, b + 1):
                base = p * width
                below = base - width
                for w in range(v, width):
                    table[base + w] += table[below + w - v]
        if want >= 0:
            out = table[b * width + want]
        else:
            out = [table[b * width + w] for w in range(width)]
    finally:
        free(table)
    return out


def box_count(a, b, c):
    """Number of partitions of c into at most b parts, each part <= a."""
    if c == 0:
        return 1
    a = a if a < c else c  # parts are >= 1: bounds beyond c are inert
    b = b if b < c else c
    if a == 0 or b == 0 or c > a * b:
        return 0
    if c > U64_SAFE_WEIGHT:
        return _kernels_py.box_count(a, b, c)
    return _box_last_row(a, b, c, c)


def box_table(a, b):
    """Partition counts in an a-by-b box, one entry per weight 0..a*b."""
    if a < 0 or b < 0:
        raise ValueError("box dimensions must be nonnegative")
    if a == 0 or b == 0:
        return [1]
    top = a * b
    if top > U64_SAFE_WEIGHT:
        return _kernels_py.box_table(a, b)
    return _box_last_row(a, b, top, -1)


def set_exact_counts(parts, b, c):
    """Counts of partitions of c into exactly s parts from ``parts``, for
    every s in 0..b (a list of length b+1).

    ``parts`` must be a strictly ascending tuple of positive integers.
    """
    if c > U64_SAFE_WEIGHT:
        return _kernels_py.set_exact_counts(parts, b, c)
    cdef int smax = b if b < c else c
    cdef int width = c + 1
    cdef uint64_t *table = _zeroed(<size_t> (smax + 1) * width)
    cdef int v, used, w, base, below
    cdef list out
    try:
        table[0] = 1
        for value in parts:
            if value > c:
                break
            v = value
            for used in range(1, smax + 1):
                base = used * width
                below = base - width
                for w in range(v, width):
                    table[base + w] += table[below + w - v]
        out = [table[s * width + c] for s in range(smax + 1)]
    finally:
        free(table)
    if b > smax:
        out.extend([0] * (b - smax))
    return out


def partition_table(n):
    """Unrestricted partition numbers p(0..n); see the pure twin for the
    recurrence notes."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if n > U64_SAFE_WEIGHT:
        return _kernels_py.partition_table(n)
    cdef int top = n
    cdef uint64_t *dp = _zeroed(<size_t> top + 1)
    cdef int v, w
    cdef list out
    try:
        dp[0] = 1
        for v in range(1, top + 1):
            for w in range(v, top + 1):
                dp[w] += dp[w - v]
        out = [dp[w] for w in range(top + 1)]
    finally:
        free(dp)
    return out
