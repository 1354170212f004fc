"""Rate-splitting parameterizations of the single-subchannel region.

The transmission scheme superposes per-user zero-forcing signals with a
multicast signal. Two parameterizations are evaluated pointwise:

* the general form with one power exponent per user (``rs_star_tuple``),
* the single-exponent restriction (``rs_tuple``), where one scalar a plus a
  common-DoF split lambda already reaches every point of the region.

``rs_region_via_fm`` turns the single-exponent description into an explicit
H-form by eliminating all auxiliary variables with Fourier-Motzkin, which is
the constructive proof that the restriction is lossless. Its output is
checked against ``canonical_region`` in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .errors import (
    CommonBudgetExceeded,
    ParameterOutOfRange,
    UnsortedAlpha,
    UserCapExceeded,
)
from .fourier_motzkin import LinearSystem, fm_project, system
from .polytopes import HPolytope, remove_redundant
from .rationals import ONE, Rat, ZERO, rat_str


def _check_alpha(alpha, require_sorted):
    alpha = tuple(Rat(a) for a in alpha)
    for a in alpha:
        if a < 0 or a > 1:
            raise ParameterOutOfRange(f"quality {rat_str(a)} outside [0, 1]")
    if require_sorted and any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
        raise UnsortedAlpha("quality vector must be nonincreasing")
    return alpha


@dataclass(frozen=True)
class RsParameters:
    """Single power exponent a in [0, 1] plus a distribution lambda over
    users splitting the multicast DoF."""

    a: "Rat"
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", Rat(self.a))
        object.__setattr__(self, "lam", tuple(Rat(x) for x in self.lam))
        if not ZERO <= self.a <= ONE:
            raise ParameterOutOfRange("power exponent outside [0, 1]")
        if any(x < 0 for x in self.lam):
            raise ParameterOutOfRange("lambda entries must be nonnegative")
        if sum(self.lam, ZERO) != ONE:
            raise ParameterOutOfRange("lambda must sum to 1")


@dataclass(frozen=True)
class RsStarParameters:
    """Per-user power exponents plus an explicit common-DoF assignment; the
    common total may not exceed 1 - max exponent."""

    a_vec: tuple
    common: tuple

    def __post_init__(self):
        object.__setattr__(self, "a_vec", tuple(Rat(x) for x in self.a_vec))
        object.__setattr__(self, "common", tuple(Rat(x) for x in self.common))
        if len(self.a_vec) != len(self.common):
            raise ParameterOutOfRange("a_vec and common must have equal length")
        for x in self.a_vec:
            if not ZERO <= x <= ONE:
                raise ParameterOutOfRange("power exponents must lie in [0, 1]")
        if any(x < 0 for x in self.common):
            raise ParameterOutOfRange("common DoF entries must be nonnegative")
        if sum(self.common, ZERO) > ONE - max(self.a_vec):
            raise CommonBudgetExceeded(
                "common DoF total exceeds 1 - max power exponent"
            )


def rs_tuple(alpha, params: RsParameters) -> tuple:
    """DoF tuple of the single-exponent scheme: per user,
    min(a, alpha_k) + (1 - a) * lambda_k. Requires sorted alpha."""
    alpha = _check_alpha(alpha, require_sorted=True)
    if len(params.lam) != len(alpha):
        raise ParameterOutOfRange("lambda length must match user count")
    a = params.a
    return tuple(
        min(a, alpha_k) + (ONE - a) * lam_k for alpha_k, lam_k in zip(alpha, params.lam)
    )


def rs_star_tuple(alpha, params: RsStarParameters) -> tuple:
    """DoF tuple of the general scheme with the maximal private assignment:
    d_i = (a_i - (max_{j != i} a_j - alpha_i)^+)^+ + common_i."""
    alpha = _check_alpha(alpha, require_sorted=False)
    a_vec, common = params.a_vec, params.common
    if len(a_vec) != len(alpha):
        raise ParameterOutOfRange("a_vec length must match user count")
    out = []
    for i, alpha_i in enumerate(alpha):
        others = max(a for j, a in enumerate(a_vec) if j != i)
        interference = max(ZERO, others - alpha_i)
        private = max(ZERO, a_vec[i] - interference)
        out.append(private + common[i])
    return tuple(out)


def rs_system(alpha) -> LinearSystem:
    """The single-exponent scheme as inequalities over (d, dc, a).

    Private DoF variables are already substituted away (d_i - dc_i takes
    their place) and the multicast budget is imposed with equality, written
    as two opposite inequalities.
    """
    alpha = _check_alpha(alpha, require_sorted=True)
    k = len(alpha)
    names = [f"d{i + 1}" for i in range(k)] + [f"dc{i + 1}" for i in range(k)] + ["a"]
    dim = 2 * k + 1
    rows = []

    def row(pairs, bound):
        coeffs = [ZERO] * dim
        for pos, val in pairs:
            coeffs[pos] = val
        rows.append((tuple(coeffs), bound))

    for i in range(k):
        d_i, dc_i = i, k + i
        row([(dc_i, ONE), (d_i, -ONE)], ZERO)          # dc_i <= d_i
        row([(dc_i, -ONE)], ZERO)                      # dc_i >= 0
        row([(d_i, ONE), (dc_i, -ONE)], alpha[i])      # d_i - dc_i <= alpha_i
        row([(d_i, ONE), (dc_i, -ONE), (dim - 1, -ONE)], ZERO)  # d_i - dc_i <= a
    budget = [(k + i, ONE) for i in range(k)] + [(dim - 1, ONE)]
    row(budget, ONE)                                   # sum dc + a <= 1
    row([(pos, -val) for pos, val in budget], -ONE)    # sum dc + a >= 1
    row([(dim - 1, ONE)], ONE)                         # a <= 1
    row([(dim - 1, -ONE)], ZERO)                       # a >= 0
    return system(names, rows)


def rs_region_via_fm(alpha) -> HPolytope:
    """Project the scheme system onto the DoF coordinates.

    Eliminates the power exponent first, then each common-DoF variable in
    user order, and strips non-facet rows from the resulting K-dimensional
    projection.
    """
    alpha = _check_alpha(alpha, require_sorted=True)
    k = len(alpha)
    if k > config.MAX_USERS:
        raise UserCapExceeded(
            f"{k} users exceeds the configured cap of {config.MAX_USERS}"
        )
    sys = rs_system(alpha)
    sys = fm_project(sys, ["a"] + [f"dc{i + 1}" for i in range(k)])
    return remove_redundant(HPolytope(k, list(sys.inequalities)))
