"""Minkowski sums and convex hulls in H-form, exactly.

The sum of two bounded polytopes is reconstructed facet-by-facet from
support functions: every facet normal of ``P + Q`` is orthogonal to a
(dim - 1)-dimensional span of edge directions of P and Q, because each face
of the sum decomposes as a face of P plus a face of Q and the affine hull of
a polytope face is spanned by its edges. Enumerating the kernels of all
(dim - 1)-sized subsets of edge directions therefore yields a complete
candidate normal set; the support value of each candidate is the sum of the
per-summand supports, and candidates whose tight point set fails to span
dimension - 1 are discarded. This stays exact while avoiding the
combinatorial blowup of hulling all pairwise vertex sums directly.

``convex_hull`` is the direct point-set hull (candidate hyperplanes through
every dim-sized affinely independent point subset). It is used as the
independent cross-check of the sum construction and for report round-trips;
it is the right tool only at small vertex counts.
"""

from __future__ import annotations

from itertools import combinations

from .errors import DegeneratePolytope, DimensionMismatch, InternalInvariantError
from .linalg import affine_rank, canonical_direction, dot, kernel_vector, rank
from .polytopes import (
    HPolytope,
    LinearInequality,
    VPolytope,
    enumerate_vertices,
)
from .rationals import Rat


def edge_directions(poly: HPolytope):
    """Canonical (sign-normalized, primitive) edge directions of a polytope.

    A vertex pair spans an edge exactly when the inequalities tight at both
    endpoints have rank dimension - 1.
    """
    verts = enumerate_vertices(poly).vertices
    dim = poly.dimension
    rows = [ineq for ineq in poly.inequalities if not ineq.is_trivial()]
    tight_sets = []
    for v in verts:
        tight_sets.append(
            frozenset(i for i, ineq in enumerate(rows) if dot(ineq.coeffs, v) == ineq.bound)
        )
    directions = set()
    for i, j in combinations(range(len(verts)), 2):
        common = tight_sets[i] & tight_sets[j]
        if len(common) < dim - 1:
            continue
        if rank([rows[k].coeffs for k in common]) == dim - 1:
            directions.add(
                canonical_direction(tuple(a - b for a, b in zip(verts[j], verts[i])))
            )
    return directions


def _support(vertices, normal):
    """Support value and argmax vertex list of a direction over a vertex set."""
    best = None
    arg = []
    for v in vertices:
        s = dot(normal, v)
        if best is None or s > best:
            best = s
            arg = [v]
        elif s == best:
            arg.append(v)
    return best, arg


def minkowski_sum(p: HPolytope, q: HPolytope) -> HPolytope:
    """H-form of ``{x + y : x in p, y in q}`` for bounded feasible p, q."""
    if p.dimension != q.dimension:
        raise DimensionMismatch("Minkowski sum requires equal dimensions")
    dim = p.dimension
    v1 = enumerate_vertices(p).vertices
    v2 = enumerate_vertices(q).vertices

    if dim == 1:
        lo = v1[0][0] + v2[0][0]
        hi = v1[-1][0] + v2[-1][0]
        rows = [
            LinearInequality((Rat(-1),), -lo),
            LinearInequality((Rat(1),), hi),
        ]
        cached = VPolytope(1, ((lo,),) if lo == hi else ((lo,), (hi,)))
        return HPolytope(1, rows, _vertices=cached)

    directions = sorted(edge_directions(p) | edge_directions(q))
    candidates = set()
    for subset in combinations(directions, dim - 1):
        normal = kernel_vector(subset, dim)
        if normal is None:
            continue
        normal = canonical_direction(normal)
        candidates.add(normal)
        candidates.add(tuple(-x for x in normal))
    # Facet normals of the summands are themselves spanned by summand edges,
    # but adding them directly is cheap insurance for the filter below.
    for poly in (p, q):
        for ineq in poly.inequalities:
            if not ineq.is_trivial():
                candidates.add(ineq.coeffs)

    facet_rows = []
    tight_by_row = []
    for normal in sorted(candidates):
        h1, arg1 = _support(v1, normal)
        h2, arg2 = _support(v2, normal)
        tight = sorted({tuple(a + b for a, b in zip(x, y)) for x in arg1 for y in arg2})
        if affine_rank(tight) == dim - 1:
            facet_rows.append(LinearInequality(normal, h1 + h2))
            tight_by_row.append(tight)

    candidate_vertices = sorted({pt for tight in tight_by_row for pt in tight})
    sum_vertices = []
    for pt in candidate_vertices:
        tight_normals = [
            row.coeffs for row in facet_rows if dot(row.coeffs, pt) == row.bound
        ]
        if rank(tight_normals) == dim:
            sum_vertices.append(pt)
    if not sum_vertices:
        raise InternalInvariantError("Minkowski sum produced no vertices")
    for pt in sum_vertices:
        for row in facet_rows:
            if dot(row.coeffs, pt) > row.bound:
                raise InternalInvariantError("Minkowski sum facet excludes a sum vertex")

    return HPolytope(
        dim, facet_rows, _vertices=VPolytope(dim, tuple(sorted(sum_vertices)))
    )


def convex_hull(points, dim) -> HPolytope:
    """Minimal H-form of the convex hull of a full-dimensional point set.

    Candidate facet hyperplanes are taken through every dim-sized affinely
    independent point subset; a hyperplane survives when all points lie on
    one side and its tight set spans dimension - 1. Cost grows as
    C(len(points), dim), so keep inputs small.
    """
    pts = sorted({tuple(Rat(x) for x in p) for p in points})
    if not pts:
        raise ValueError("convex hull of an empty point set")
    if affine_rank(pts) < dim:
        raise DegeneratePolytope("point set does not span the ambient dimension")

    if dim == 1:
        lo, hi = pts[0][0], pts[-1][0]
        rows = [LinearInequality((Rat(-1),), -lo), LinearInequality((Rat(1),), hi)]
        return HPolytope(1, rows, _vertices=VPolytope(1, ((lo,), (hi,))))

    rows = set()
    for subset in combinations(pts, dim):
        base = subset[0]
        diffs = [tuple(a - b for a, b in zip(other, base)) for other in subset[1:]]
        if rank(diffs) != dim - 1:
            continue
        normal = kernel_vector(diffs, dim)
        normal = canonical_direction(normal)
        level = dot(normal, base)
        below = above = False
        for pt in pts:
            s = dot(normal, pt)
            if s > level:
                above = True
            elif s < level:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            rows.add(LinearInequality(tuple(-x for x in normal), -level))
        else:
            rows.add(LinearInequality(normal, level))

    facet_rows = []
    for row in sorted(rows, key=lambda r: (r.coeffs, r.bound)):
        tight = [p for p in pts if dot(row.coeffs, p) == row.bound]
        if affine_rank(tight) == dim - 1:
            facet_rows.append(row)

    vertices = []
    for pt in pts:
        tight_normals = [r.coeffs for r in facet_rows if dot(r.coeffs, pt) == r.bound]
        if rank(tight_normals) == dim:
            vertices.append(pt)
    return HPolytope(dim, facet_rows, _vertices=VPolytope(dim, tuple(sorted(vertices))))
