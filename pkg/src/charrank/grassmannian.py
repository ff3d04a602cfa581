"""Mod-2 Betti numbers of real Grassmann manifolds.

For the Grassmannian of k-planes in R^n, the degree-c cell structure gives
one generator per partition of c into at most k parts each at most n-k, so
the Betti number in degree c is exactly that box-partition count and the
full table is symmetric of total dimension k(n-k).

``gaussian_binomial`` recomputes the same table a second way — the
q-binomial coefficient [n choose k]_q expanded by exact polynomial
arithmetic — and is kept free of the counting kernels so the two can
cross-check each other.
"""

from dataclasses import dataclass

from charrank import _dispatch
from charrank.errors import InvalidDimensions
from charrank.partitions import _check_count


def _check_dims(n, k):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidDimensions(f"ambient dimension must be a positive integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= n:
        raise InvalidDimensions(f"plane dimension must satisfy 0 <= k <= {n}, got {k!r}")


@dataclass(frozen=True)
class PoincareTable:
    """Betti numbers of one Grassmannian, indexed by degree 0..k(n-k)."""

    n: int
    k: int
    betti: tuple

    @property
    def dim(self):
        """Dimension of the manifold; also the top degree of the table."""
        return self.k * (self.n - self.k)


def betti(n, k, degree):
    """The mod-2 Betti number of the k-planes-in-R^n Grassmannian in the
    given degree (0 beyond the manifold dimension)."""
    _check_dims(n, k)
    _check_count("degree", degree)
    return _dispatch.box_count(n - k, k, degree)


def poincare(n, k):
    """The full Betti table of the k-planes-in-R^n Grassmannian."""
    _check_dims(n, k)
    return PoincareTable(n=n, k=k, betti=tuple(_dispatch.box_table(n - k, k)))


def _shift_difference(coeffs, gap):
    """Coefficients of (1 - q**gap) * f for f given by ``coeffs``."""
    out = list(coeffs) + [0] * gap
    for i in range(len(coeffs)):
        out[i + gap] -= coeffs[i]
    return out


def _shift_quotient(coeffs, gap):
    """Coefficients of f / (1 - q**gap), verifying the division is exact."""
    deg = len(coeffs) - 1
    quot = [0] * (deg - gap + 1)
    for i in range(len(quot)):
        quot[i] = coeffs[i] + (quot[i - gap] if i >= gap else 0)
    if _shift_difference(quot, gap) != list(coeffs):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


def gaussian_binomial(n, k):
    """Coefficient tuple of the q-binomial coefficient [n choose k]_q,
    computed by the product formula

        prod_{i=1..k} (1 - q**(n-k+i)) / (1 - q**i)

    with exact integer polynomials, asserting each division is exact.
    Independent of the partition kernels by design.
    """
    _check_dims(n, k)
    coeffs = [1]
    for i in range(1, k + 1):
        coeffs = _shift_difference(coeffs, n - k + i)
        coeffs = _shift_quotient(coeffs, i)
    return tuple(coeffs)
