"""Pure-Python counting kernels.

These are the reference implementations of the dynamic-programming cores.
A compiled twin (``_kernels_c``) provides the same four entry points; the
active backend is chosen in ``_dispatch``.  Everything here works with
native Python integers, so results are exact at any size.

All functions are pure: each call builds its own tables, so concurrent use
from multiple threads is safe by construction.
"""

BACKEND = "python"


def _box_dp(a: int, b: int, top: int) -> list:
    """Flat (b+1) x (top+1) table of f(a, parts, w) = partitions of w into
    at most ``parts`` parts, each <= a.

    Bottom-up form of the recurrence that splits on whether a part of the
    current maximum size occurs:

        f(v, p, w) = f(v-1, p, w) + f(v, p-1, w-v)

    with f(0, p, w) = f(v, 0, w) = [w == 0].  Updating in place with p
    ascending makes the second term read the already-updated row, which is
    exactly f(v, p-1, .).
    """
    width = top + 1
    table = [0] * ((b + 1) * width)
    for row in range(b + 1):
        table[row * width] = 1
    for v in range(1, a + 1):
        for p in range(1, b + 1):
            base = p * width
            below = base - width
            for w in range(v, width):
                table[base + w] += table[below + w - v]
    return table


def box_count(a: int, b: int, c: int) -> int:
    """Number of partitions of c into at most b parts, each part <= a."""
    if c == 0:
        return 1
    # Parts are >= 1, so neither bound beyond c changes the count.
    a = min(a, c)
    b = min(b, c)
    if a == 0 or b == 0 or c > a * b:
        return 0
    table = _box_dp(a, b, c)
    return table[b * (c + 1) + c]


def box_table(a: int, b: int) -> list:
    """Partition counts in an a-by-b box, one entry per weight 0..a*b."""
    if a < 0 or b < 0:
        raise ValueError("box dimensions must be nonnegative")
    top = a * b
    table = _box_dp(a, b, top)
    return table[b * (top + 1) :]


def set_exact_counts(parts: tuple, b: int, c: int) -> list:
    """Counts of partitions of c into exactly s parts from ``parts``,
    for every s in 0..b (a list of length b+1).

    ``parts`` must be a strictly ascending tuple of positive integers.
    State is (index into the part set, parts used, remaining weight); the
    in-place update over ascending s allows unlimited multiplicity.
    """
    smax = min(b, c)  # parts are >= 1, so more than c of them never fit
    width = c + 1
    table = [0] * ((smax + 1) * width)
    table[0] = 1
    for v in parts:
        if v > c:
            break
        for used in range(1, smax + 1):
            base = used * width
            below = base - width
            for w in range(v, width):
                table[base + w] += table[below + w - v]
    out = [table[s * width + c] for s in range(smax + 1)]
    if b > smax:
        out.extend([0] * (b - smax))
    return out


def partition_table(n: int) -> list:
    """Unrestricted partition numbers p(0..n) by the parts-accumulation DP.

    Deliberately not the pentagonal-number recurrence: that one lives in
    ``oracles`` and serves as the independent cross-check.
    """
    if n < 0:
        raise ValueError("weight must be nonnegative")
    dp = [0] * (n + 1)
    dp[0] = 1
    for v in range(1, n + 1):
        for w in range(v, n + 1):
            dp[w] += dp[w - v]
    return dp
