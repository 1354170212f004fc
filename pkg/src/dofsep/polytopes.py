"""Bounded convex polytopes over exact rationals.

A polytope is held in H-form (inequalities ``a . x <= b``) or V-form (the
list of extreme points). Vertex enumeration is a brute-force scan of
basis-sized inequality subsets with shared-prefix Gaussian elimination; this
is exact, deterministic, and fast enough for the ambient dimensions this
toolkit targets (<= 6, with hot use at <= 4).

Conventions that keep outputs bit-reproducible:

* inequalities are normalized to primitive integer coefficient vectors and
  stored sorted lexicographically;
* vertex lists are sorted lexicographically ascending;
* all scalars are exact rationals (see ``dofsep.rationals``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegeneratePolytope,
    DimensionMismatch,
    EmptyPolytope,
    NonpositiveScale,
    Unbounded,
)
from .linalg import affine_rank, dot, primitive, rank
from .rationals import ONE, Rat, ZERO, rat_str


@dataclass(frozen=True)
class LinearInequality:
    """A single constraint ``coeffs . x <= bound``."""

    coeffs: tuple
    bound: "Rat"

    def normalized(self) -> "LinearInequality":
        """Scale by a positive rational so coefficients are primitive integers.

        All-zero coefficient vectors (tautologies or contradictions) are
        returned unchanged apart from bound sign preservation.
        """
        prim = primitive(self.coeffs)
        factor = None
        for new, old in zip(prim, self.coeffs):
            if old:
                factor = new / old
                break
        if factor is None:
            return LinearInequality(tuple(self.coeffs), self.bound)
        return LinearInequality(prim, self.bound * factor)

    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def satisfied_by(self, point) -> bool:
        return dot(self.coeffs, point) <= self.bound

    def render(self, names=None) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            name = names[i] if names else f"x{i + 1}"
            if c == 1:
                terms.append(f"+ {name}" if terms else name)
            elif c == -1:
                terms.append(f"- {name}" if terms else f"-{name}")
            else:
                mag = rat_str(c if c > 0 else -c)
                if terms:
                    terms.append(f"{'+' if c > 0 else '-'} {mag}*{name}")
                else:
                    terms.append(f"{rat_str(c)}*{name}")
        lhs = " ".join(terms) if terms else "0"
        return f"{lhs} <= {rat_str(self.bound)}"


@dataclass(frozen=True)
class VPolytope:
    """A bounded polytope as its minimal vertex list (lex sorted)."""

    dimension: int
    vertices: tuple


class HPolytope:
    """A bounded polytope as an inequality system ``A x <= b``.

    The constructor canonicalizes: every inequality is normalized, exact
    duplicates are merged, and the list is sorted. The represented set is
    never altered. Vertex enumeration results are cached on the instance;
    instances are treated as immutable.
    """

    __slots__ = ("dimension", "inequalities", "_vertices", "_checked_bounded")

    def __init__(self, dimension, inequalities, _vertices=None):
        if dimension < 1:
            raise ValueError("ambient dimension must be >= 1")
        normalized = []
        for ineq in inequalities:
            if len(ineq.coeffs) != dimension:
                raise DimensionMismatch(
                    f"inequality has {len(ineq.coeffs)} coefficients, expected {dimension}"
                )
            normalized.append(ineq.normalized())
        unique = sorted(set(normalized), key=lambda q: (q.coeffs, q.bound))
        self.dimension = dimension
        self.inequalities = tuple(unique)
        self._vertices = _vertices
        self._checked_bounded = _vertices is not None

    def __eq__(self, other):
        # Representation equality; use polytopes_equal for set equality.
        return (
            isinstance(other, HPolytope)
            and self.dimension == other.dimension
            and self.inequalities == other.inequalities
        )

    def __hash__(self):
        return hash((self.dimension, self.inequalities))

    def __repr__(self):
        return f"HPolytope(dim={self.dimension}, {len(self.inequalities)} inequalities)"


def hpolytope(dimension, rows) -> HPolytope:
    """Build an HPolytope from (coefficients, bound) pairs."""
    return HPolytope(
        dimension,
        [LinearInequality(tuple(Rat(c) for c in coeffs), Rat(bound)) for coeffs, bound in rows],
    )


# ---------------------------------------------------------------------------
# Vertex enumeration
# ---------------------------------------------------------------------------

def _proper_rows(poly):
    """Non-trivial rows as (coeffs, bound); raise on an explicit contradiction."""
    rows = []
    for ineq in poly.inequalities:
        if ineq.is_trivial():
            if ineq.bound < 0:
                raise EmptyPolytope("system contains 0 <= negative")
            continue
        rows.append((ineq.coeffs, ineq.bound))
    return rows


def _basic_feasible_points(rows, dim):
    """All basic feasible solutions of ``rows`` via shared-prefix elimination.

    Scans every dim-sized subset of rows but skips whole subtrees as soon as
    a prefix is linearly dependent, and shares the elimination work of common
    prefixes.
    """
    n = len(rows)
    coeff_list = [r[0] for r in rows]
    bound_list = [r[1] for r in rows]
    reduced = []  # reduced augmented rows, unit pivot
    pivots = []  # pivot column per reduced row
    found = set()

    def reduce_against_stack(idx):
        vec = list(coeff_list[idx]) + [bound_list[idx]]
        for rr, pc in zip(reduced, pivots):
            f = vec[pc]
            if f:
                for c in range(dim + 1):
                    vec[c] -= f * rr[c]
        for c in range(dim):
            if vec[c]:
                inv = ONE / vec[c]
                for cc in range(c, dim + 1):
                    vec[cc] *= inv
                return vec, c
        return None, -1

    def solve_current():
        x = [ZERO] * dim
        for vec, pc in zip(reversed(reduced), reversed(pivots)):
            val = vec[dim]
            for c in range(dim):
                if c != pc and vec[c]:
                    val -= vec[c] * x[c]
            x[pc] = val
        return tuple(x)

    def recurse(start, depth):
        if depth == dim:
            x = solve_current()
            if x not in found:
                for a, b in rows:
                    if dot(a, x) > b:
                        break
                else:
                    found.add(x)
            return
        # keep enough rows available to complete the basis
        for idx in range(start, n - (dim - depth) + 1):
            vec, pc = reduce_against_stack(idx)
            if vec is None:
                continue
            reduced.append(vec)
            pivots.append(pc)
            recurse(idx + 1, depth + 1)
            reduced.pop()
            pivots.pop()

    recurse(0, 0)
    return found


def _has_unbounded_ray(rows, dim) -> bool:
    """Whether the recession cone {y : A y <= 0} contains a nonzero ray.

    Assumes the coefficient matrix has full column rank (pointed cone), so
    any nonzero recession direction implies an extreme ray supported by
    dim - 1 independent tight rows.
    """
    coeff_list = [r[0] for r in rows]
    if dim == 1:
        has_pos = any(a[0] > 0 for a in coeff_list)
        has_neg = any(a[0] < 0 for a in coeff_list)
        return not (has_pos and has_neg)

    n = len(rows)
    reduced = []
    pivots = []

    def reduce_against_stack(idx):
        vec = list(coeff_list[idx])
        for rr, pc in zip(reduced, pivots):
            f = vec[pc]
            if f:
                for c in range(dim):
                    vec[c] -= f * rr[c]
        for c in range(dim):
            if vec[c]:
                inv = ONE / vec[c]
                for cc in range(c, dim):
                    vec[cc] *= inv
                return vec, c
        return None, -1

    def kernel_of_current():
        pivot_cols = set(pivots)
        free = next(c for c in range(dim) if c not in pivot_cols)
        y = [ZERO] * dim
        y[free] = ONE
        for vec, pc in zip(reversed(reduced), reversed(pivots)):
            val = ZERO
            for c in range(dim):
                if c != pc and vec[c]:
                    val -= vec[c] * y[c]
            y[pc] = val
        return y

    def recurse(start, depth):
        if depth == dim - 1:
            y = kernel_of_current()
            all_nonpos = True
            all_nonneg = True
            for a in coeff_list:
                s = dot(a, y)
                if s > 0:
                    all_nonpos = False
                elif s < 0:
                    all_nonneg = False
                if not (all_nonpos or all_nonneg):
                    return False
            return True
        for idx in range(start, n - (dim - 1 - depth) + 1):
            vec, pc = reduce_against_stack(idx)
            if vec is None:
                continue
            reduced.append(vec)
            pivots.append(pc)
            hit = recurse(idx + 1, depth + 1)
            reduced.pop()
            pivots.pop()
            if hit:
                return True
        return False

    return recurse(0, 0)


def _fm_feasible(rows, dim) -> bool:
    """Feasibility of ``rows`` by naive Fourier-Motzkin, for the corner case
    of coefficient matrices without full column rank."""
    work = [(tuple(a), b) for a, b in rows]
    for col in range(dim):
        pos, neg, zero = [], [], []
        for a, b in work:
            c = a[col]
            if c > 0:
                pos.append(([x / c for x in a], b / c))
            elif c < 0:
                neg.append(([x / -c for x in a], b / -c))
            else:
                zero.append((a, b))
        new = list(zero)
        for an, bn in neg:
            for ap, bp in pos:
                coeffs = tuple(x + y for x, y in zip(an, ap))
                new.append((coeffs, bn + bp))
        pruned = set()
        for a, b in new:
            if any(a):
                pruned.add((tuple(a), b))
            elif b < 0:
                return False
        work = list(pruned)
    return True


def enumerate_vertices(poly: HPolytope) -> VPolytope:
    """Exact extreme points of a feasible bounded H-polytope.

    Raises EmptyPolytope when infeasible and Unbounded when any direction is
    unbounded. Vertices come out sorted lexicographically ascending. The
    polytope may be lower-dimensional; full dimensionality is not assumed.
    """
    if poly._vertices is not None:
        return poly._vertices
    rows = _proper_rows(poly)
    dim = poly.dimension
    if rank([r[0] for r in rows]) < dim:
        # No basic solutions exist: the set is empty or contains a line.
        if _fm_feasible(rows, dim):
            raise Unbounded("polyhedron contains a line")
        raise EmptyPolytope("inequality system is infeasible")
    found = _basic_feasible_points(rows, dim)
    if not found:
        raise EmptyPolytope("inequality system is infeasible")
    if not poly._checked_bounded:
        if _has_unbounded_ray(rows, dim):
            raise Unbounded("polyhedron has an unbounded direction")
        poly._checked_bounded = True
    result = VPolytope(dim, tuple(sorted(found)))
    poly._vertices = result
    return result


# ---------------------------------------------------------------------------
# Redundancy removal and predicates
# ---------------------------------------------------------------------------

def remove_redundant(poly: HPolytope) -> HPolytope:
    """Minimal H-form of a full-dimensional bounded polytope.

    An inequality survives exactly when it supports a facet: its tight
    vertex set affinely spans dimension - 1. On full-dimensional polytopes
    this keeps precisely the inequalities whose removal would enlarge the
    set, and the result is the unique minimal description. The vertex set is
    never changed.
    """
    verts = enumerate_vertices(poly).vertices
    dim = poly.dimension
    if affine_rank(verts) < dim:
        raise DegeneratePolytope(
            "redundancy removal requires a full-dimensional polytope"
        )
    kept = []
    for ineq in poly.inequalities:
        if ineq.is_trivial():
            continue
        tight = [v for v in verts if dot(ineq.coeffs, v) == ineq.bound]
        if len(tight) >= dim and affine_rank(tight) == dim - 1:
            kept.append(ineq)
    return HPolytope(dim, kept, _vertices=poly._vertices)


def contains_point(poly: HPolytope, point) -> bool:
    """Exact membership test."""
    if len(point) != poly.dimension:
        raise DimensionMismatch(
            f"point has {len(point)} coordinates, expected {poly.dimension}"
        )
    return all(ineq.satisfied_by(point) for ineq in poly.inequalities)


def is_subset(poly: HPolytope, other: HPolytope) -> bool:
    """Whether every point of ``poly`` lies in ``other``.

    Decided by checking all vertices of ``poly`` against the inequalities of
    ``other``; valid because both sets are convex and ``poly`` is bounded.
    """
    if poly.dimension != other.dimension:
        raise DimensionMismatch("polytopes live in different dimensions")
    verts = enumerate_vertices(poly).vertices
    return all(
        dot(ineq.coeffs, v) <= ineq.bound
        for ineq in other.inequalities
        for v in verts
    )


def polytopes_equal(poly: HPolytope, other: HPolytope) -> bool:
    """Set equality (mutual containment)."""
    return is_subset(poly, other) and is_subset(other, poly)


def scale_polytope(poly: HPolytope, factor) -> HPolytope:
    """The dilation ``factor * P`` for ``factor > 0``: same facet normals,
    bounds multiplied by the factor."""
    factor = Rat(factor)
    if factor <= 0:
        raise NonpositiveScale(f"scale factor must be positive, got {rat_str(factor)}")
    rows = [LinearInequality(ineq.coeffs, ineq.bound * factor) for ineq in poly.inequalities]
    cached = None
    if poly._vertices is not None:
        cached = VPolytope(
            poly.dimension,
            tuple(sorted(tuple(factor * x for x in v) for v in poly._vertices.vertices)),
        )
    return HPolytope(poly.dimension, rows, _vertices=cached)
