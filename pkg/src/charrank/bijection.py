"""The weight-transport bijection behind the interval-restricted counts.

Subtracting the least allowed value from every part of a partition (and
discarding the zeros that appear) is a bijection

    partitions of w into exactly x parts, each in {lo, .., hi}
      <-->
    partitions of w - lo*x into at most x parts, each at most hi - lo,

with inverse "add lo to every part, then pad with parts equal to lo".
``verify_bijection`` enumerates both sides for one parameter tuple and
checks the round trips and the cardinality transfer element by element.
"""

from charrank.errors import PreconditionViolation
from charrank.partitions import (
    DEFAULT_ENUMERATION_CAP,
    Partition,
    enumerate_set_exact,
)
from charrank.report import Identity, VerificationReport


def _check_interval(min_part, max_part):
    if not isinstance(min_part, int) or isinstance(min_part, bool) or min_part < 1:
        raise PreconditionViolation(f"least part must be a positive integer, got {min_part!r}")
    if not isinstance(max_part, int) or isinstance(max_part, bool) or max_part < min_part:
        raise PreconditionViolation(
            f"greatest part must be an integer >= {min_part}, got {max_part!r}"
        )


def _check_num_parts(num_parts):
    if not isinstance(num_parts, int) or isinstance(num_parts, bool) or num_parts < 1:
        raise PreconditionViolation(f"number of parts must be a positive integer, got {num_parts!r}")


def reduce(p, num_parts, min_part, max_part):
    """Subtract ``min_part`` from every part of ``p`` and drop the zeros.

    ``p`` must consist of exactly ``num_parts`` parts, every one of them in
    [min_part, max_part]; anything else raises PreconditionViolation.
    """
    _check_interval(min_part, max_part)
    _check_num_parts(num_parts)
    if not isinstance(p, Partition):
        p = Partition(p)
    if len(p) != num_parts:
        raise PreconditionViolation(f"expected exactly {num_parts} parts, got {len(p)}")
    for v in p:
        if not min_part <= v <= max_part:
            raise PreconditionViolation(
                f"part {v} falls outside [{min_part}, {max_part}]"
            )
    return Partition([v - min_part for v in p if v > min_part])


def expand(q, num_parts, min_part):
    """Add ``min_part`` to every part of ``q``, then pad with parts equal
    to ``min_part`` until there are exactly ``num_parts`` parts.

    ``q`` may have at most ``num_parts`` parts.
    """
    _check_interval(min_part, min_part)
    _check_num_parts(num_parts)
    if not isinstance(q, Partition):
        q = Partition(q)
    if len(q) > num_parts:
        raise PreconditionViolation(
            f"expected at most {num_parts} parts, got {len(q)}"
        )
    grown = [v + min_part for v in q]
    grown.extend([min_part] * (num_parts - len(q)))
    return Partition(grown)


def verify_bijection(min_part, max_part, weight, num_parts, cap=DEFAULT_ENUMERATION_CAP):
    """Check the transport bijection for one (min_part, max_part, weight,
    num_parts) tuple by full enumeration of both sides.

    Verifies that reduce is into the reduced side, expand is into the
    original side, both round trips are identities, reduce preserves the
    shifted weight, and the two sides have equal cardinality.  Returns a
    VerificationReport with ``checked == 1``.
    """
    _check_interval(min_part, max_part)
    _check_num_parts(num_parts)
    if not isinstance(weight, int) or isinstance(weight, bool) or weight < 0:
        raise PreconditionViolation(f"weight must be a nonnegative integer, got {weight!r}")

    tag = (
        ("min_part", min_part),
        ("max_part", max_part),
        ("weight", weight),
        ("num_parts", num_parts),
    )
    report = VerificationReport(
        identity_id=Identity.BIJECTION_ROUND_TRIP,
        swept_ranges={k: str(v) for k, v in tag},
        checked=1,
    )

    interval = range(min_part, max_part + 1)
    domain = enumerate_set_exact(interval, num_parts, weight, cap=cap)

    residual = weight - min_part * num_parts
    reduced_interval = range(1, max_part - min_part + 1)  # empty when max == min
    codomain = []
    if residual >= 0:
        for used in range(num_parts + 1):
            codomain.extend(enumerate_set_exact(reduced_interval, used, residual, cap=cap))
    codomain_set = set(codomain)

    report.compare(tag + (("check", "cardinality"),), len(domain), len(codomain))

    for p in domain:
        q = reduce(p, num_parts, min_part, max_part)
        if q not in codomain_set:
            report.compare(tag + (("check", "image membership"),), repr(q), "reduced side")
            continue
        report.compare(tag + (("check", "shifted weight"), ("p", repr(p))), q.weight, residual)
        back = expand(q, num_parts, min_part)
        report.compare(tag + (("check", "round trip"), ("p", repr(p))), repr(back), repr(p))

    domain_set = set(domain)
    for q in codomain:
        p = expand(q, num_parts, min_part)
        if p not in domain_set:
            report.compare(tag + (("check", "preimage membership"), ("q", repr(q))), repr(p), "original side")
            continue
        back = reduce(p, num_parts, min_part, max_part)
        report.compare(tag + (("check", "round trip"), ("q", repr(q))), repr(back), repr(q))

    return report
