"""Independent cross-check recurrences.

Deliberately separate from the dynamic-programming kernels so that a bug
in either implementation cannot hide: these share no code with
``_kernels_py`` / ``_kernels_c`` and use a different recurrence entirely.
"""


def pentagonal_partition_table(limit):
    """Unrestricted partition numbers p(0..limit) by Euler's
    generalized-pentagonal recurrence:

        p(n) = sum over k >= 1 of (-1)^(k-1) * (p(n - k(3k-1)/2)
                                                + p(n - k(3k+1)/2))

    Pure-Python big integers throughout.
    """
    if not isinstance(limit, int) or isinstance(limit, bool) or limit < 0:
        raise ValueError(f"limit must be a nonnegative integer, got {limit!r}")
    table = [0] * (limit + 1)
    table[0] = 1
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * table[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * table[n - g2]
            k += 1
        table[n] = total
    return table
