"""Structured results for the identity checks.

A VerificationReport records what grid was swept, how many instances were
checked, and every counterexample found.  ``checked`` counts grid
instances (one per parameter tuple), not individual comparisons — a single
instance may compare several quantities, and any mismatch is recorded as
one CheckFailure tagged with the comparison that broke.
"""

from dataclasses import dataclass, field
from enum import Enum


class Identity(Enum):
    """The machine-checkable identities and invariants this package ships.

    EQ3 is the interval-transport identity (counting with parts from
    {nu..mu} against shifted counts in a box), EQ4 expresses p(j) through
    box counts, and EQ5 is the tail form of EQ3 for parts from {1..k} with
    j > k; the remaining members are cross-implementation consistency
    sweeps.
    """

    EQ3 = "eq3"
    EQ4 = "eq4"
    EQ5 = "eq5"
    BIJECTION_ROUND_TRIP = "bijection"
    ORACLE_EQUIVALENCE = "oracle"
    GRASSMANNIAN_TABLES = "grassmannian-tables"
    BOUND_SHARPNESS = "sharpness"
    PARTITION_FUNCTION_CROSSCHECK = "partition-function"


@dataclass(frozen=True)
class CheckFailure:
    """One counterexample: the parameters that produced it and the two
    values that should have agreed (rendered as strings for display)."""

    params: tuple
    lhs: object
    rhs: object

    def describe(self):
        settings = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"[{settings}] {self.lhs} != {self.rhs}"


@dataclass
class VerificationReport:
    identity_id: Identity
    swept_ranges: dict
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def compare(self, params, lhs, rhs):
        """Record a comparison (without bumping ``checked``; callers count
        instances themselves)."""
        if lhs != rhs:
            self.failures.append(CheckFailure(tuple(params), lhs, rhs))

    def absorb(self, other):
        """Fold another report's tallies into this one."""
        self.checked += other.checked
        self.failures.extend(other.failures)
