"""Constructive per-subchannel decomposition of outer-bound DoF tuples.

For a totally ordered pattern, any tuple d in the outer-bound region splits
into per-subchannel tuples averaging exactly to d, one member per
subchannel region. The construction mirrors the sufficiency argument:

1. represent a dominating tuple with a single power level a and a multicast
   split lambda, locating a by exact search over the breakpoints of the
   piecewise-linear budget margin;
2. pin a between two consecutive sorted average qualities and interpolate
   the per-subchannel power levels with the same fraction, which is valid
   because total order makes every subchannel interval run in parallel;
3. evaluate the scheme per subchannel;
4. shave the per-user surplus (the dominating tuple may exceed d) off the
   earliest subchannels, which stays feasible because the regions are
   downward closed.

Every step is exact; the postconditions (memberships and the average
identity) are re-verified before returning.
"""

from __future__ import annotations

from .csit import CsitPattern, average_state, is_totally_ordered, normalize_user_order
from .errors import (
    InternalInvariantError,
    NotTotallyOrdered,
    TupleOutsideOuterBound,
)
from .polytopes import contains_point
from .rationals import ONE, Rat, ZERO
from .regions import outer_bound_region, subchannel_region


def _budget_margin(a, targets, averages):
    """1 - a minus the multicast DoF needed on top of private rates at level a."""
    needed = ZERO
    for d_k, avg_k in zip(targets, averages):
        private = a if a < avg_k else avg_k
        if d_k > private:
            needed += d_k - private
    return ONE - a - needed


def _pick_power_level(targets, averages):
    """Largest-margin breakpoint of the budget margin (ties: smallest a).

    The margin is concave and piecewise linear in a with breakpoints only at
    the average qualities and the target values, so scanning breakpoints
    finds its maximum exactly.
    """
    points = {ZERO, ONE}
    points.update(averages)
    points.update(x for x in targets if ZERO <= x <= ONE)
    best_a, best_margin = None, None
    for a in sorted(points):
        margin = _budget_margin(a, targets, averages)
        if best_margin is None or margin > best_margin:
            best_a, best_margin = a, margin
    return best_a, best_margin


def separate_tuple(pattern: CsitPattern, dof) -> tuple:
    """Split ``dof`` into one member per subchannel region, averaging back
    to ``dof`` exactly.

    Raises NotTotallyOrdered for unordered patterns and
    TupleOutsideOuterBound when ``dof`` is not in the outer-bound region.
    """
    dof = tuple(Rat(x) for x in dof)
    if not is_totally_ordered(pattern):
        raise NotTotallyOrdered("decomposition requires a totally ordered pattern")
    outer = outer_bound_region(pattern)
    if not contains_point(outer, dof):
        raise TupleOutsideOuterBound("tuple is not in the outer-bound region")

    sorted_pattern, perm = normalize_user_order(pattern)
    k, m_count = pattern.users, pattern.subchannels
    targets = tuple(dof[perm[i] - 1] for i in range(k))
    averages = average_state(sorted_pattern)

    a, margin = _pick_power_level(targets, averages)
    if margin < 0:
        raise InternalInvariantError("no feasible power level for a member tuple")
    residuals = tuple(
        max(ZERO, d_k - min(a, avg_k)) for d_k, avg_k in zip(targets, averages)
    )
    if a == ONE:
        lam = [ONE] + [ZERO] * (k - 1)
    else:
        lam = [r / (ONE - a) for r in residuals]
        lam[0] += ONE - sum(lam, ZERO)

    # Pin a between consecutive extended averages (1 = a_0 >= ... >= a_{K+1} = 0).
    extended = (ONE,) + averages + (ZERO,)
    pos = next(i for i in range(1, k + 2) if extended[i - 1] >= a >= extended[i])
    span = extended[pos - 1] - extended[pos]
    t = ZERO if span == 0 else (a - extended[pos]) / span

    members = []
    for m in range(1, m_count + 1):
        column = (ONE,) + sorted_pattern.column(m) + (ZERO,)
        a_m = column[pos] + t * (column[pos - 1] - column[pos])
        members.append(
            [min(a_m, q) + (ONE - a_m) * lam_k for q, lam_k in zip(column[1:-1], lam)]
        )

    # Shave the dominating tuple's surplus so the average is exact.
    for i in range(k):
        surplus = min(a, averages[i]) + (ONE - a) * lam[i] - targets[i]
        if surplus < 0:
            raise InternalInvariantError("member average fails to dominate the target")
        remaining = surplus * m_count
        for member in members:
            if remaining == 0:
                break
            take = member[i] if member[i] < remaining else remaining
            member[i] -= take
            remaining -= take
        if remaining != 0:
            raise InternalInvariantError("surplus exceeds removable member mass")

    inverse = [0] * k
    for sorted_pos, original in enumerate(perm):
        inverse[original - 1] = sorted_pos
    result = tuple(
        tuple(member[inverse[u]] for u in range(k)) for member in members
    )

    for m, member in enumerate(result, start=1):
        if not contains_point(subchannel_region(pattern, m), member):
            raise InternalInvariantError(
                f"member tuple for subchannel {m} left its region"
            )
    for u in range(k):
        if sum((member[u] for member in result), ZERO) != dof[u] * m_count:
            raise InternalInvariantError("member tuples do not average to the input")
    return result
