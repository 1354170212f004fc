"""Degrees-of-freedom regions of the K-user parallel MISO broadcast channel.

Every region here is an instance of one parametric polyhedron family: given
qualities beta in [0,1]^K, the region collects the nonnegative DoF tuples
whose every subset sum d(S) stays below 1 + beta(S) - max_{j in S} beta_j.
Single subchannels, the averaged outer bound, and the separate-coding
achievable set are all built from that family; the separate-coding region is
the (1/M)-scaled Minkowski sum of the per-subchannel regions.

The subset-sum family is *not* submodular in general, which is exactly why
Minkowski sums of these regions need real polyhedral computation instead of
the facet-wise direct sum that polymatroids would allow; ``is_polymatroid``
exhibits that failure.
"""

from __future__ import annotations

from . import config
from .csit import CsitPattern, average_state
from .errors import (
    EmptySubset,
    IndexOutOfRange,
    ParameterOutOfRange,
    SameUser,
    UserCapExceeded,
)
from .minkowski import minkowski_sum
from .polytopes import HPolytope, LinearInequality, remove_redundant, scale_polytope
from .rationals import ONE, Rat, ZERO, rat_str


def _check_cap(k: int):
    if k > config.MAX_USERS:
        raise UserCapExceeded(
            f"{k} users exceeds the configured cap of {config.MAX_USERS}"
        )


def user_subsets(k: int):
    """All nonempty subsets of users 1..k as ascending tuples, enumerated in
    bitmask order (deterministic)."""
    for mask in range(1, 1 << k):
        yield tuple(u + 1 for u in range(k) if mask >> u & 1)


def canonical_region(beta) -> HPolytope:
    """The parametric region for a quality vector beta, redundancy-pruned.

    Inequalities: d_k >= 0 for every user, and for every nonempty subset S,
    sum of d over S <= 1 + beta(S) - max_{j in S} beta_j. The family is
    symmetric under simultaneous relabeling of users and beta entries, so no
    sorting of beta is required.
    """
    beta = tuple(Rat(b) for b in beta)
    k = len(beta)
    _check_cap(k)
    for b in beta:
        if b < 0 or b > 1:
            raise ParameterOutOfRange(f"quality {rat_str(b)} outside [0, 1]")
    rows = []
    for i in range(k):
        coeffs = [ZERO] * k
        coeffs[i] = -ONE
        rows.append(LinearInequality(tuple(coeffs), ZERO))
    for subset in user_subsets(k):
        coeffs = [ZERO] * k
        total = ZERO
        best = None
        for u in subset:
            coeffs[u - 1] = ONE
            total += beta[u - 1]
            if best is None or beta[u - 1] > best:
                best = beta[u - 1]
        rows.append(LinearInequality(tuple(coeffs), ONE + total - best))
    return remove_redundant(HPolytope(k, rows))


def subchannel_region(pattern: CsitPattern, m: int) -> HPolytope:
    """Single-subchannel region: the canonical region of column m (1-based)."""
    if not 1 <= m <= pattern.subchannels:
        raise IndexOutOfRange(
            f"subchannel {m} outside 1..{pattern.subchannels}"
        )
    return canonical_region(pattern.column(m))


def outer_bound_region(pattern: CsitPattern) -> HPolytope:
    """Outer bound for the joint-coding region: the canonical region of the
    average state. Axes match input user indices (the family is
    permutation-covariant, so no sorting round-trip is needed)."""
    return canonical_region(average_state(pattern))


def separate_coding_region(pattern: CsitPattern) -> HPolytope:
    """Achievable region of per-subchannel coding: the Minkowski sum of all
    subchannel regions, scaled by 1/M."""
    total = subchannel_region(pattern, 1)
    for m in range(2, pattern.subchannels + 1):
        total = minkowski_sum(total, subchannel_region(pattern, m))
    return scale_polytope(total, Rat(1, pattern.subchannels))


def _validate_users(pattern: CsitPattern, users):
    for u in users:
        if not 1 <= u <= pattern.users:
            raise IndexOutOfRange(f"user {u} outside 1..{pattern.users}")


def subset_sum_dof_bound(pattern: CsitPattern, subset) -> "Rat":
    """Outer-bound cap on the summed DoF of a nonempty user subset:
    1 + avg(S) - max_{i in S} avg_i."""
    subset = tuple(sorted(set(subset)))
    if not subset:
        raise EmptySubset("subset of users must be nonempty")
    _validate_users(pattern, subset)
    averages = average_state(pattern)
    chosen = [averages[u - 1] for u in subset]
    return ONE + sum(chosen, ZERO) - max(chosen)


def region_set_function(beta, subset) -> "Rat":
    """The subset function behind the canonical region: 0 on the empty set,
    else 1 + beta(S) - max_{j in S} beta_j."""
    beta = tuple(Rat(b) for b in beta)
    subset = tuple(sorted(set(subset)))
    for u in subset:
        if not 1 <= u <= len(beta):
            raise IndexOutOfRange(f"user {u} outside 1..{len(beta)}")
    if not subset:
        return ZERO
    chosen = [beta[u - 1] for u in subset]
    return ONE + sum(chosen, ZERO) - max(chosen)


def submodularity_sides(beta, s, t):
    """Both sides of the submodularity comparison for subsets s, t with the
    two leading 1's stripped: left is the union/intersection side, right the
    s/t side. Meaningful when all four subsets are nonempty."""
    beta = tuple(Rat(b) for b in beta)
    s, t = set(s), set(t)
    union, inter = s | t, s & t

    def g(subset):
        if not subset:
            return ZERO
        chosen = [beta[u - 1] for u in subset]
        return sum(chosen, ZERO) - max(chosen)

    return g(union) + g(inter), g(s) + g(t)


def is_polymatroid(beta):
    """Whether the region's subset function is normalized, nondecreasing and
    submodular; returns (True, None) or (False, first violating pair).

    The scan runs over all subset pairs in bitmask order and reports the
    first pair violating monotonicity (S subset of T with f(S) > f(T)) or
    submodularity (f(S) + f(T) < f(S u T) + f(S n T)).
    """
    beta = tuple(Rat(b) for b in beta)
    k = len(beta)
    _check_cap(k)
    values = [ZERO] * (1 << k)
    for mask in range(1, 1 << k):
        chosen = [beta[u] for u in range(k) if mask >> u & 1]
        values[mask] = ONE + sum(chosen, ZERO) - max(chosen)

    def members(mask):
        return tuple(u + 1 for u in range(k) if mask >> u & 1)

    for s_mask in range(1 << k):
        f_s = values[s_mask]
        for t_mask in range(1 << k):
            f_t = values[t_mask]
            if s_mask & t_mask == s_mask and f_s > f_t:
                return False, (members(s_mask), members(t_mask))
            if f_s + f_t < values[s_mask | t_mask] + values[s_mask & t_mask]:
                return False, (members(s_mask), members(t_mask))
    return True, None


def pair_sep_sum_cap(pattern: CsitPattern, k: int, j: int) -> "Rat":
    """Largest DoF sum users k and j can reach under separate coding:
    1 + (1/M) * sum over subchannels of min(alpha_k, alpha_j)."""
    if k == j:
        raise SameUser("need two distinct users")
    _validate_users(pattern, (k, j))
    row_k, row_j = pattern.row(k), pattern.row(j)
    total = sum((min(a, b) for a, b in zip(row_k, row_j)), ZERO)
    return ONE + total / pattern.subchannels
