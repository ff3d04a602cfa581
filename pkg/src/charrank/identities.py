"""Machine checks for the partition identities this package rests on.

Each ``verify_*`` function checks one parameter tuple and returns a
VerificationReport; ``verify_sweep`` drives a whole grid for one identity,
and ``run_all`` runs every sweep at its default ranges (what the CLI's
``verify all`` does).  All checks go through the public counting API, so a
defect in either kernel backend surfaces as a failed report rather than a
wrong answer quietly propagating.
"""

from itertools import combinations
from math import comb

from charrank.bounds import UNBOUNDED, BundleProfile, betti_upper_bound, betti_upper_bound_gapless
from charrank.bijection import verify_bijection
from charrank.errors import PreconditionViolation
from charrank.grassmannian import gaussian_binomial, poincare
from charrank.oracles import pentagonal_partition_table
from charrank.partitions import (
    PartsSet,
    count_box,
    count_set_any,
    count_set_at_most,
    count_set_exact,
    count_total,
    enumerate_box,
    enumerate_set_exact,
)
from charrank.report import Identity, VerificationReport

_DEFAULT_RANGES = {
    Identity.EQ3: {"max_mu": 10, "max_j": 30},
    Identity.EQ4: {"max_j": 30},
    Identity.EQ5: {"k": None, "max_k": 8, "max_j": 30},
    Identity.BIJECTION_ROUND_TRIP: {"max_mu": 8, "max_x": 8, "max_j": 32},
    Identity.ORACLE_EQUIVALENCE: {"max_part": 6, "max_parts": 6, "max_weight": 36},
    Identity.GRASSMANNIAN_TABLES: {"max_n": 24},
    Identity.BOUND_SHARPNESS: {"max_k": 8, "max_j": 30},
    Identity.PARTITION_FUNCTION_CROSSCHECK: {"max_weight": 200},
}


def _check_arg(name, value, minimum=1):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")


def _single_report(identity, params):
    return VerificationReport(
        identity_id=identity,
        swept_ranges={k: str(v) for k, v in params},
        checked=1,
    )


def _eq3_sides(min_part, max_part, weight):
    """Both sides of the interval-transport identity: partitions of
    ``weight`` with parts in {min_part..max_part} (any number of parts)
    against box counts of the reduced weights."""
    smax = weight // min_part
    interval = range(min_part, max_part + 1)
    lhs = count_set_at_most(interval, smax, weight)  # s = 0 contributes nothing for weight >= 1
    gap = max_part - min_part
    rhs = sum(count_box(gap, s, weight - min_part * s) for s in range(1, smax + 1))
    return lhs, rhs


def verify_eq3(min_part, max_part, weight):
    """Check, for one (min_part, max_part, weight), that counting
    partitions with parts in the interval matches the transported box
    counts."""
    _check_arg("min_part", min_part)
    _check_arg("max_part", max_part, minimum=min_part)
    _check_arg("weight", weight)
    params = (("min_part", min_part), ("max_part", max_part), ("weight", weight))
    report = _single_report(Identity.EQ3, params)
    lhs, rhs = _eq3_sides(min_part, max_part, weight)
    report.compare(params, lhs, rhs)
    return report


def _eq4_sides(weight):
    lhs = count_total(weight)
    rhs = sum(count_box(weight - 1, s, weight - s) for s in range(1, weight + 1))
    return lhs, rhs


def verify_eq4(weight):
    """Check that p(weight) equals the sum over s of partitions of
    weight - s in an (weight-1) x s box."""
    _check_arg("weight", weight)
    params = (("weight", weight),)
    report = _single_report(Identity.EQ4, params)
    lhs, rhs = _eq4_sides(weight)
    report.compare(params, lhs, rhs)
    return report


def _eq5_sides(num_degrees, weight):
    interval = range(1, num_degrees + 1)
    lhs = count_set_at_most(interval, weight, weight)
    first = -(-weight // num_degrees)
    rhs = sum(count_box(num_degrees - 1, s, weight - s) for s in range(first, weight + 1))
    return lhs, rhs


def verify_eq5(num_degrees, weight):
    """Check the tail form: for weight > num_degrees, partitions of
    ``weight`` with parts at most ``num_degrees`` match the box counts
    summed from s = ceil(weight/num_degrees); additionally confirms the
    left side equals the any-number-of-parts count."""
    _check_arg("num_degrees", num_degrees)
    if not isinstance(weight, int) or isinstance(weight, bool) or weight <= num_degrees:
        raise PreconditionViolation(
            f"weight must be an integer exceeding num_degrees={num_degrees}, got {weight!r}"
        )
    params = (("num_degrees", num_degrees), ("weight", weight))
    report = _single_report(Identity.EQ5, params)
    lhs, rhs = _eq5_sides(num_degrees, weight)
    report.compare(params + (("check", "tail form"),), lhs, rhs)
    report.compare(
        params + (("check", "any-parts form"),),
        lhs,
        count_set_any(range(1, num_degrees + 1), weight),
    )
    return report


def _sweep_eq3(report, max_mu, max_j):
    for mu in range(1, max_mu + 1):
        for nu in range(1, mu + 1):
            for j in range(nu, max_j + 1):
                report.checked += 1
                lhs, rhs = _eq3_sides(nu, mu, j)
                report.compare(
                    (("min_part", nu), ("max_part", mu), ("weight", j)), lhs, rhs
                )


def _sweep_eq4(report, max_j):
    for j in range(1, max_j + 1):
        report.checked += 1
        lhs, rhs = _eq4_sides(j)
        report.compare((("weight", j),), lhs, rhs)


def _sweep_eq5(report, max_k, max_j, k=None):
    fixed = [k] if k is not None else range(1, max_k + 1)
    for num_degrees in fixed:
        for j in range(num_degrees + 1, max_j + 1):
            report.checked += 1
            lhs, rhs = _eq5_sides(num_degrees, j)
            report.compare(
                (("num_degrees", num_degrees), ("weight", j), ("check", "tail form")),
                lhs,
                rhs,
            )
            report.compare(
                (("num_degrees", num_degrees), ("weight", j), ("check", "any-parts form")),
                lhs,
                count_set_any(range(1, num_degrees + 1), j),
            )


def _sweep_bijection(report, max_mu, max_x, max_j):
    for mu in range(1, max_mu + 1):
        for nu in range(1, mu + 1):
            for x in range(1, max_x + 1):
                for j in range(max_j + 1):
                    report.absorb(verify_bijection(nu, mu, j, x))


def _sweep_oracle(report, max_part, max_parts, max_weight):
    for a in range(max_part + 1):
        for b in range(max_parts + 1):
            for c in range(max_weight + 1):
                report.checked += 1
                params = (
                    ("subject", "box"),
                    ("max_part", a),
                    ("max_parts", b),
                    ("weight", c),
                )
                report.compare(params, count_box(a, b, c), len(enumerate_box(a, b, c)))
    values = range(1, max_part + 1)
    for size in range(1, max_part + 1):
        for members in combinations(values, size):
            for b in range(max_parts + 1):
                for c in range(max_weight + 1):
                    report.checked += 1
                    params = (
                        ("subject", "set-exact"),
                        ("parts", ",".join(map(str, members))),
                        ("num_parts", b),
                        ("weight", c),
                    )
                    report.compare(
                        params,
                        count_set_exact(members, b, c),
                        len(enumerate_set_exact(members, b, c)),
                    )


def _sweep_grassmannian(report, max_n):
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            report.checked += 1
            params = (("n", n), ("k", k))
            table = poincare(n, k).betti
            report.compare(
                params + (("check", "generating polynomial"),),
                list(table),
                list(gaussian_binomial(n, k)),
            )
            report.compare(
                params + (("check", "palindrome"),), list(table), list(table[::-1])
            )
            report.compare(
                params + (("check", "total rank"),), sum(table), comb(n, k)
            )


def _sweep_sharpness(report, max_k, max_j):
    for k in range(1, max_k + 1):
        profile = BundleProfile(UNBOUNDED, PartsSet(range(1, k + 1)), UNBOUNDED)
        for j in range(1, max_j + 1):
            report.checked += 1
            params = (("num_degrees", k), ("degree", j))
            bound = betti_upper_bound(profile, j)
            if j <= k:
                report.compare(
                    params + (("check", "all partitions reachable"),),
                    bound,
                    count_total(j),
                )
            else:
                first = -(-j // k)
                tail = sum(count_box(k - 1, s, j - s) for s in range(first, j + 1))
                report.compare(params + (("check", "tail form"),), bound, tail)
            report.compare(
                params + (("check", "gapless form"),),
                bound,
                betti_upper_bound_gapless(profile, j),
            )


def _sweep_partition_crosscheck(report, max_weight):
    expected = pentagonal_partition_table(max_weight)
    for w in range(max_weight + 1):
        report.checked += 1
        report.compare((("weight", w),), count_total(w), expected[w])


_SWEEPERS = {
    Identity.EQ3: _sweep_eq3,
    Identity.EQ4: _sweep_eq4,
    Identity.EQ5: _sweep_eq5,
    Identity.BIJECTION_ROUND_TRIP: _sweep_bijection,
    Identity.ORACLE_EQUIVALENCE: _sweep_oracle,
    Identity.GRASSMANNIAN_TABLES: _sweep_grassmannian,
    Identity.BOUND_SHARPNESS: _sweep_sharpness,
    Identity.PARTITION_FUNCTION_CROSSCHECK: _sweep_partition_crosscheck,
}

#: Order the sweeps run in under ``run_all`` (and the CLI's ``verify all``).
SWEEP_ORDER = (
    Identity.EQ3,
    Identity.EQ4,
    Identity.EQ5,
    Identity.BIJECTION_ROUND_TRIP,
    Identity.ORACLE_EQUIVALENCE,
    Identity.GRASSMANNIAN_TABLES,
    Identity.BOUND_SHARPNESS,
    Identity.PARTITION_FUNCTION_CROSSCHECK,
)


def verify_sweep(identity_id, ranges=None):
    """Sweep one identity over a parameter grid and report.

    ``identity_id`` is an Identity or its string value; ``ranges`` may
    override any of that identity's default range parameters (unknown keys
    are rejected).  A grid with no instances raises ValueError.
    """
    identity = identity_id if isinstance(identity_id, Identity) else Identity(identity_id)
    merged = dict(_DEFAULT_RANGES[identity])
    if ranges:
        unknown = sorted(set(ranges) - set(merged))
        if unknown:
            raise ValueError(
                f"unknown range parameter(s) for {identity.value}: {', '.join(unknown)}"
            )
        for key, value in ranges.items():
            _check_arg(key, value, minimum=0)
        merged.update(ranges)
    report = VerificationReport(
        identity_id=identity,
        swept_ranges={k: str(v) for k, v in sorted(merged.items()) if v is not None},
    )
    _SWEEPERS[identity](report, **merged)
    if report.checked == 0:
        raise ValueError(f"empty parameter grid for {identity.value}: {merged}")
    return report


def run_all(overrides=None):
    """Run every sweep at its default ranges (optionally overridden per
    identity) and return the reports in SWEEP_ORDER."""
    overrides = overrides or {}
    return [verify_sweep(identity, overrides.get(identity)) for identity in SWEEP_ORDER]
