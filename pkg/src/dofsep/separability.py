"""Separability decision with proof or counterexample.

A parallel channel is separable (per-subchannel coding loses nothing, region
wise) exactly when the CSIT pattern is totally ordered. The verdict does not
take that theorem on faith in either direction:

* ordered patterns get the region equality separate == outer re-verified by
  exact polytope comparison (a mismatch would be a toolkit bug and raises);
* unordered patterns come with a machine-checkable certificate: the order
  violation, both pair sum caps, and a joint-coding-achievable DoF tuple
  that provably fails membership in the separate-coding region.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .csit import (
    CsitPattern,
    OrderViolationWitness,
    average_state,
    is_totally_ordered,
    order_violation_witness,
)
from .errors import InternalInvariantError, UserCapExceeded
from .polytopes import contains_point, polytopes_equal
from .rationals import ONE, Rat, ZERO
from .regions import outer_bound_region, pair_sep_sum_cap, separate_coding_region


@dataclass(frozen=True)
class SeparabilityVerdict:
    """Outcome of the separability decision.

    Separable verdicts carry no witnesses. Inseparable verdicts carry the
    order violation, the DoF tuple achievable jointly but not separately,
    and the two pair sum caps it separates (separate cap strictly below the
    joint cap).
    """

    separable: bool
    order_witness: "OrderViolationWitness | None" = None
    dof_witness: "tuple | None" = None
    separate_pair_cap: "Rat | None" = None
    joint_pair_cap: "Rat | None" = None


def separability_verdict(pattern: CsitPattern) -> SeparabilityVerdict:
    """Decide separability of ``pattern`` and certify the answer."""
    if pattern.users > config.MAX_USERS:
        raise UserCapExceeded(
            f"{pattern.users} users exceeds the configured cap of {config.MAX_USERS}"
        )
    separate = separate_coding_region(pattern)
    if is_totally_ordered(pattern):
        outer = outer_bound_region(pattern)
        if not polytopes_equal(separate, outer):
            raise InternalInvariantError(
                "totally ordered pattern with separate != outer region"
            )
        return SeparabilityVerdict(separable=True)

    witness = order_violation_witness(pattern)
    if witness is None:
        raise InternalInvariantError("unordered pattern without an order violation")
    averages = average_state(pattern)
    # The DoF witness puts the stronger-average user of the pair at 1.
    strong, weak = witness.k, witness.j
    if averages[strong - 1] < averages[weak - 1]:
        strong, weak = weak, strong
    cap_value = min(averages[witness.k - 1], averages[witness.j - 1])
    dof = [ZERO] * pattern.users
    dof[strong - 1] = ONE
    dof[weak - 1] = cap_value
    dof = tuple(dof)
    if contains_point(separate, dof):
        raise InternalInvariantError(
            "inseparability witness unexpectedly lies in the separate-coding region"
        )
    return SeparabilityVerdict(
        separable=False,
        order_witness=witness,
        dof_witness=dof,
        separate_pair_cap=pair_sep_sum_cap(pattern, witness.k, witness.j),
        joint_pair_cap=ONE + cap_value,
    )
