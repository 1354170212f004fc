"""Fourier-Motzkin elimination over labeled inequality systems.

Eliminating a variable partitions the system by that variable's coefficient
sign, rescales each signed row so the coefficient is -1 or +1, and adds
every (negative, positive) row pair; zero-coefficient rows carry over.
All-zero rows produced along the way are tautologies when the bound is
nonnegative (dropped) and witness infeasibility otherwise (raised).

After each step, derived rows are pruned: exact duplicates are merged and
any row implied by one or two surviving rows plus explicit nonnegativity
rows is discarded. That conic test is sound (never removes a non-redundant
row) and it reproduces the hand pruning a careful derivation would do, while
staying cheap and deterministic. It does not promise a *minimal* system for
intermediate projections; callers that need minimal H-forms convert the
final full-dimensional projection to a polytope and strip non-facets there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InfeasibleProjection, UnknownVariable
from .polytopes import HPolytope, LinearInequality
from .rationals import ZERO


@dataclass(frozen=True)
class LinearSystem:
    """Inequalities over an ordered tuple of named variables."""

    variables: tuple
    inequalities: tuple

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable labels")
        for ineq in self.inequalities:
            if len(ineq.coeffs) != len(self.variables):
                raise DimensionMismatch(
                    f"inequality has {len(ineq.coeffs)} coefficients for "
                    f"{len(self.variables)} variables"
                )

    @property
    def dimension(self) -> int:
        return len(self.variables)


def system(variables, rows) -> LinearSystem:
    """Build a LinearSystem from (coefficients, bound) pairs."""
    variables = tuple(variables)
    ineqs = tuple(
        LinearInequality(tuple(coeffs), bound).normalized() for coeffs, bound in rows
    )
    return LinearSystem(variables, ineqs)


def to_hpolytope(sys: LinearSystem) -> HPolytope:
    return HPolytope(sys.dimension, list(sys.inequalities))


def _implied_by(row, others, nonneg_coords):
    """Whether ``row`` follows from one or two rows of ``others`` plus the
    explicit nonnegativity rows indexed by ``nonneg_coords``.

    ``row`` is implied by s (or s1 + s2) when the bound does not decrease and
    the coefficient surplus (s - row) is nonnegative and supported only on
    coordinates with an explicit ``-x_i <= 0`` row.
    """
    r_coeffs, r_bound = row.coeffs, row.bound
    dim = len(r_coeffs)

    def dominated(s_coeffs, s_bound):
        if r_bound < s_bound:
            return False
        for i in range(dim):
            diff = s_coeffs[i] - r_coeffs[i]
            if diff < 0:
                return False
            if diff > 0 and i not in nonneg_coords:
                return False
        return True

    m = len(others)
    for a in range(m):
        s1 = others[a]
        if dominated(s1.coeffs, s1.bound):
            return True
    for a in range(m):
        s1 = others[a]
        if s1.bound > r_bound:
            continue
        for b in range(a, m):
            s2 = others[b]
            if s1.bound + s2.bound > r_bound:
                continue
            combo = tuple(x + y for x, y in zip(s1.coeffs, s2.coeffs))
            if dominated(combo, s1.bound + s2.bound):
                return True
    return False


def prune_rows(rows):
    """Deduplicate and strip conically implied rows; order-stable output."""
    unique = sorted(
        {r.normalized() for r in rows if not (r.is_trivial() and r.bound >= 0)},
        key=lambda q: (q.coeffs, q.bound),
    )
    dim = len(unique[0].coeffs) if unique else 0
    nonneg_coords = set()
    for r in unique:
        if r.bound == 0:
            nz = [(i, c) for i, c in enumerate(r.coeffs) if c]
            if len(nz) == 1 and nz[0][1] == -1:
                nonneg_coords.add(nz[0][0])
    survivors = list(unique)
    i = 0
    while i < len(survivors):
        row = survivors[i]
        rest = survivors[:i] + survivors[i + 1 :]
        if not row.is_trivial() and _implied_by(row, rest, nonneg_coords):
            survivors.pop(i)
        else:
            i += 1
    return survivors


def fm_eliminate(sys: LinearSystem, variable) -> LinearSystem:
    """Project the feasible set onto the variables other than ``variable``."""
    try:
        idx = sys.variables.index(variable)
    except ValueError:
        raise UnknownVariable(f"variable {variable!r} not in system") from None

    keep_vars = sys.variables[:idx] + sys.variables[idx + 1 :]
    positive, negative, zero = [], [], []
    for ineq in sys.inequalities:
        c = ineq.coeffs[idx]
        if c > 0:
            positive.append(
                LinearInequality(tuple(x / c for x in ineq.coeffs), ineq.bound / c)
            )
        elif c < 0:
            negative.append(
                LinearInequality(tuple(x / -c for x in ineq.coeffs), ineq.bound / -c)
            )
        else:
            zero.append(ineq)

    def drop_col(coeffs):
        return coeffs[:idx] + coeffs[idx + 1 :]

    produced = [LinearInequality(drop_col(i.coeffs), i.bound) for i in zero]
    for lo in negative:
        for hi in positive:
            coeffs = drop_col(tuple(a + b for a, b in zip(lo.coeffs, hi.coeffs)))
            bound = lo.bound + hi.bound
            if not any(coeffs):
                if bound < 0:
                    raise InfeasibleProjection(
                        f"eliminating {variable!r} derived 0 <= {bound}"
                    )
                continue
            produced.append(LinearInequality(coeffs, bound))
    for ineq in produced:
        if ineq.is_trivial() and ineq.bound < 0:
            raise InfeasibleProjection(f"system contains 0 <= {ineq.bound}")

    return LinearSystem(keep_vars, tuple(prune_rows(produced)))


def fm_project(sys: LinearSystem, variables) -> LinearSystem:
    """Eliminate several variables in the order given."""
    for var in variables:
        sys = fm_eliminate(sys, var)
    return sys
