"""Exact counting and explicit enumeration of integer partitions.

Counting here follows the usual conventions: the empty partition is the
unique partition of 0, and "exactly zero parts" admits only weight 0.
Counts are computed by dynamic programming (see ``_dispatch``); the
enumeration functions recurse over parts in decreasing order and exist
mainly so tests can cross-check the counts against something that cannot
share a bug with them.
"""

from charrank import _dispatch
from charrank.errors import CapExceeded

#: Default bound on the effective search box (largest part x number of
#: parts) accepted by the enumeration functions.
DEFAULT_ENUMERATION_CAP = 64


def _check_count(name, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
    return value


class Partition:
    """An integer partition, stored as its parts in non-increasing order.

    Accepts the parts in any order and canonicalizes; every part must be a
    positive integer.  Partitions compare and hash by their part tuple, so
    they can live in sets and dicts.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts=()):
        collected = list(parts)
        for p in collected:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        self._parts = tuple(sorted(collected, reverse=True))

    @property
    def parts(self):
        return self._parts

    @property
    def weight(self):
        return sum(self._parts)

    def __len__(self):
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return f"Partition({list(self._parts)!r})"


class PartsSet:
    """A finite, nonempty set of distinct positive integers — the allowed
    part values for the restricted counts below.  Kept in ascending order.
    """

    __slots__ = ("_members",)

    def __init__(self, members):
        collected = list(members)
        for m in collected:
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise ValueError(f"part values must be positive integers, got {m!r}")
        if not collected:
            raise ValueError("a PartsSet needs at least one value")
        self._members = tuple(sorted(set(collected)))

    @classmethod
    def interval(cls, lo, hi):
        """The consecutive run {lo, lo+1, .., hi}."""
        if not isinstance(lo, int) or not isinstance(hi, int) or lo < 1 or hi < lo:
            raise ValueError(f"need 1 <= lo <= hi, got lo={lo!r}, hi={hi!r}")
        return cls(range(lo, hi + 1))

    @property
    def members(self):
        return self._members

    @property
    def least(self):
        return self._members[0]

    @property
    def greatest(self):
        return self._members[-1]

    def is_gapless(self):
        """True when the members form a consecutive run."""
        return self.greatest - self.least + 1 == len(self._members)

    def truncated(self, bound):
        """The members that are <= bound, as a plain tuple (possibly empty)."""
        return tuple(m for m in self._members if m <= bound)

    def __iter__(self):
        return iter(self._members)

    def __len__(self):
        return len(self._members)

    def __contains__(self, value):
        return value in self._members

    def __eq__(self, other):
        if not isinstance(other, PartsSet):
            return NotImplemented
        return self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        return f"PartsSet({list(self._members)!r})"


def _as_members(parts):
    """Normalize ``parts`` (a PartsSet or any iterable of values) to an
    ascending tuple of distinct positive integers.  May be empty."""
    if isinstance(parts, PartsSet):
        return parts.members
    collected = list(parts)
    for m in collected:
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"part values must be positive integers, got {m!r}")
    return tuple(sorted(set(collected)))


def count_box(max_part, max_parts, weight):
    """Partitions of ``weight`` into at most ``max_parts`` parts, each at
    most ``max_part``.  Equivalently: partitions fitting in a
    max_part x max_parts box."""
    _check_count("max_part", max_part)
    _check_count("max_parts", max_parts)
    _check_count("weight", weight)
    return _dispatch.box_count(max_part, max_parts, weight)


def count_set_exact(parts, num_parts, weight):
    """Partitions of ``weight`` into exactly ``num_parts`` parts, all drawn
    from ``parts`` (with repetition)."""
    members = _as_members(parts)
    _check_count("num_parts", num_parts)
    _check_count("weight", weight)
    if num_parts > weight:
        # every part is >= 1, so exactly num_parts of them weigh at least
        # num_parts; only the empty partition of 0 survives
        return 1 if weight == 0 and num_parts == 0 else 0
    if not members:
        return 1 if weight == 0 and num_parts == 0 else 0
    return _dispatch.set_exact_counts(members, num_parts, weight)[num_parts]


def count_set_at_most(parts, max_parts, weight):
    """Partitions of ``weight`` into at most ``max_parts`` parts from
    ``parts``; the empty partition counts when ``weight`` is 0."""
    members = _as_members(parts)
    _check_count("max_parts", max_parts)
    _check_count("weight", weight)
    if not members:
        return 1 if weight == 0 else 0
    bound = min(max_parts, weight)
    return sum(_dispatch.set_exact_counts(members, bound, weight))


def count_set_any(parts, weight):
    """Partitions of ``weight`` into any number of parts from ``parts``."""
    members = _as_members(parts)
    _check_count("weight", weight)
    if weight == 0:
        return 1
    if not members:
        return 0
    return count_set_at_most(members, weight // members[0], weight)


def count_total(weight):
    """The unrestricted partition number p(weight)."""
    _check_count("weight", weight)
    return _dispatch.partition_table(weight)[weight]


def _check_cap(largest, slots, weight, cap):
    effective = min(largest, weight) * min(slots, weight)
    if effective > cap:
        raise CapExceeded(
            f"enumeration box {min(largest, weight)}x{min(slots, weight)} "
            f"exceeds the cap of {cap}; raise `cap` to insist"
        )


def enumerate_box(max_part, max_parts, weight, cap=DEFAULT_ENUMERATION_CAP):
    """All partitions counted by ``count_box``, largest-part-first within
    each partition and lexicographically decreasing across the list.

    Refuses (``CapExceeded``) when the effective search box — largest part
    times number of parts, both clamped to ``weight`` — exceeds ``cap``.
    """
    _check_count("max_part", max_part)
    _check_count("max_parts", max_parts)
    _check_count("weight", weight)
    _check_cap(max_part, max_parts, weight, cap)
    found = []
    acc = []

    def descend(remaining, largest, slots):
        if remaining == 0:
            found.append(Partition(acc))
            return
        if slots == 0:
            return
        for v in range(min(largest, remaining), 0, -1):
            if v * slots < remaining:
                break  # v and everything smaller can no longer reach the weight
            acc.append(v)
            descend(remaining - v, v, slots - 1)
            acc.pop()

    descend(weight, min(max_part, weight), min(max_parts, weight))
    return found


def enumerate_set_exact(parts, num_parts, weight, cap=DEFAULT_ENUMERATION_CAP):
    """All partitions counted by ``count_set_exact``, lexicographically
    decreasing.  Same cap policy as ``enumerate_box``."""
    members = _as_members(parts)
    _check_count("num_parts", num_parts)
    _check_count("weight", weight)
    if not members or num_parts == 0:
        keep = num_parts == 0 and weight == 0
        return [Partition([])] if keep else []
    if num_parts > weight:
        return []
    _check_cap(members[-1], num_parts, weight, cap)
    descending = members[::-1]
    least = members[0]
    found = []
    acc = []

    def descend(remaining, start, slots):
        if slots == 0:
            if remaining == 0:
                found.append(Partition(acc))
            return
        for i in range(start, len(descending)):
            v = descending[i]
            if v * slots < remaining:
                break  # even all-v can't reach the weight, nor can smaller values
            if remaining - v < (slots - 1) * least:
                continue  # v is too large to leave the other slots viable
            acc.append(v)
            descend(remaining - v, i, slots - 1)
            acc.pop()

    descend(weight, 0, num_parts)
    return found
