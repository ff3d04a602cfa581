"""Betti-number upper bounds from a sparse characteristic-class profile.

A BundleProfile captures what the bound needs to know about a space X
carrying a real vector bundle: the top degree ``dim_x`` with nonzero
cohomology (possibly UNBOUNDED), the set ``s_set`` of degrees i in which
the i-th Stiefel-Whitney class of the bundle may be nonzero, and a degree
``t`` up to which cohomology is known to be generated by those classes
(a verified lower bound for the characteristic rank, possibly UNBOUNDED).

In any degree j <= t, every cohomology class is a polynomial in the
nonzero Stiefel-Whitney classes, so the mod-2 Betti number b_j is at most
the number of degree-j monomials in generators of those degrees — a
restricted partition count.  ``betti_upper_bound`` evaluates that count
directly; ``betti_upper_bound_gapless`` evaluates the equivalent
box-partition form available when the truncated degree set has no gaps.
"""

from dataclasses import dataclass

from charrank.errors import DegreeOutOfRange, NotGapless, PreconditionViolation
from charrank.partitions import PartsSet, count_box, count_set_any, count_set_at_most

#: Marker for "no known finite bound" (compares above every integer).
UNBOUNDED = float("inf")


def _check_extent(name, value):
    if value == UNBOUNDED:
        return
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise PreconditionViolation(
            f"{name} must be a positive integer or UNBOUNDED, got {value!r}"
        )


@dataclass(frozen=True)
class BundleProfile:
    """The inputs to the Betti bound; validated on construction."""

    dim_x: object
    s_set: PartsSet
    t: object

    def __post_init__(self):
        _check_extent("dim_x", self.dim_x)
        _check_extent("t", self.t)
        if not isinstance(self.s_set, PartsSet):
            object.__setattr__(self, "s_set", PartsSet(self.s_set))
        if self.t > self.dim_x:
            raise PreconditionViolation(
                f"t={self.t} exceeds dim_x={self.dim_x}"
            )
        if self.s_set.greatest > self.dim_x:
            raise PreconditionViolation(
                f"degree {self.s_set.greatest} in s_set exceeds dim_x={self.dim_x}"
            )


def _check_degree(profile, degree):
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise DegreeOutOfRange(f"degree must be a positive integer, got {degree!r}")
    if degree > profile.t:
        raise DegreeOutOfRange(
            f"degree {degree} exceeds the verified generation range t={profile.t}"
        )


def betti_upper_bound(profile, degree):
    """Upper bound for the mod-2 Betti number of the base in ``degree``:
    the number of partitions of ``degree`` into parts from the profile's
    degree set (values above ``degree`` can never occur and are dropped)."""
    _check_degree(profile, degree)
    usable = profile.s_set.truncated(degree)
    return count_set_at_most(usable, degree // profile.s_set.least, degree)


def betti_upper_bound_gapless(profile, degree):
    """Same bound, evaluated through the box-partition form.

    Requires the degrees of the profile that are <= ``degree`` to form a
    consecutive run {lo, .., hi} (NotGapless otherwise).  The count then
    transports to partitions in boxes: summing over the number of parts s,
    partitions of degree - lo*s into at most s parts each at most hi - lo.
    """
    _check_degree(profile, degree)
    usable = profile.s_set.truncated(degree)
    if not usable:
        return 0
    lo, hi = usable[0], usable[-1]
    if hi - lo + 1 != len(usable):
        raise NotGapless(
            f"degrees {list(usable)} are not consecutive; use betti_upper_bound"
        )
    total = 0
    for used in range(-(-degree // hi), degree // lo + 1):
        total += count_box(hi - lo, used, degree - lo * used)
    return total


def monomial_count(parts, degree):
    """Number of degree-``degree`` monomials in commuting generators whose
    degrees are the distinct values of ``parts`` (each generator usable any
    number of times)."""
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise ValueError(f"degree must be a positive integer, got {degree!r}")
    return count_set_any(parts, degree)
