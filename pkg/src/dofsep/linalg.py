"""Dense exact linear algebra over rationals.

Everything here targets the small systems arising from polyhedral work in
ambient dimension <= ~10: Gaussian elimination with exact pivots, rank,
one-dimensional kernels, and primitive integer scalings of rational vectors.
No floating point anywhere.
"""

from __future__ import annotations

from math import gcd

from .rationals import Rat, ZERO, ONE


def dot(a, b) -> "Rat":
    total = ZERO
    for x, y in zip(a, b):
        if x and y:
            total += x * y
    return total


def solve_square(rows, rhs):
    """Solve the n x n system ``rows * x = rhs`` exactly.

    Returns the solution tuple, or None when the matrix is singular.
    """
    n = len(rows)
    aug = [list(row) + [r] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        pivot_row = aug[col]
        inv = ONE / pivot_row[col]
        for c in range(col, n + 1):
            pivot_row[c] *= inv
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                other = aug[r]
                for c in range(col, n + 1):
                    other[c] -= factor * pivot_row[c]
    return tuple(aug[r][n] for r in range(n))


def rank(rows) -> int:
    """Rank of a list of rational vectors."""
    if not rows:
        return 0
    work = [list(r) for r in rows]
    dim = len(work[0])
    rk = 0
    for col in range(dim):
        piv = None
        for r in range(rk, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        pivot_row = work[rk]
        inv = ONE / pivot_row[col]
        for c in range(col, dim):
            pivot_row[c] *= inv
        for r in range(len(work)):
            if r != rk and work[r][col]:
                factor = work[r][col]
                other = work[r]
                for c in range(col, dim):
                    other[c] -= factor * pivot_row[c]
        rk += 1
        if rk == min(len(work), dim):
            break
    return rk


def affine_rank(points) -> int:
    """Dimension of the affine hull of a point set (0 for a single point)."""
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    diffs = [tuple(x - b for x, b in zip(p, base)) for p in pts[1:]]
    return rank(diffs)


def kernel_vector(rows, dim):
    """One nonzero kernel vector of the span of ``rows`` (length ``dim``).

    Returns None when the rows have full column rank. When the nullity
    exceeds one, an arbitrary (but deterministic) kernel vector is returned.
    """
    work = [list(r) for r in rows]
    pivots = []  # (row index in reduced form, pivot column)
    rk = 0
    for col in range(dim):
        piv = None
        for r in range(rk, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        pivot_row = work[rk]
        inv = ONE / pivot_row[col]
        for c in range(col, dim):
            pivot_row[c] *= inv
        for r in range(len(work)):
            if r != rk and work[r][col]:
                factor = work[r][col]
                other = work[r]
                for c in range(col, dim):
                    other[c] -= factor * pivot_row[c]
        pivots.append(col)
        rk += 1
    if rk == dim:
        return None
    pivot_cols = set(pivots)
    free = next(c for c in range(dim) if c not in pivot_cols)
    vec = [ZERO] * dim
    vec[free] = ONE
    for r, col in enumerate(pivots):
        vec[col] = -work[r][free]
    return tuple(vec)


def primitive(vec):
    """Scale a rational vector by a positive factor to primitive integers.

    The result has integer entries with gcd 1 and the same direction. The
    zero vector is returned unchanged.
    """
    nums = []
    den_lcm = 1
    for x in vec:
        d = int(x.denominator)
        den_lcm = den_lcm // gcd(den_lcm, d) * d
    g = 0
    scaled = []
    for x in vec:
        n = int(x.numerator) * (den_lcm // int(x.denominator))
        scaled.append(n)
        g = gcd(g, n)
    if g == 0:
        return tuple(vec)
    return tuple(Rat(n // g) for n in scaled)


def canonical_direction(vec):
    """Primitive form with the first nonzero entry positive (for +/- dedupe)."""
    prim = primitive(vec)
    for x in prim:
        if x:
            return prim if x > 0 else tuple(-y for y in prim)
    return prim
