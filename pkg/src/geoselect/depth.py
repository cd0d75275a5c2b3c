"""Containment predicates and depth engines for induced-object families.

Depth of a query point is the number of induced objects containing it.  Two
engines are provided: a brute-force oracle (`depth_brute`) that enumerates
every inducing pair through the family predicate, and closed-form fast paths
(`depth_fast`) driven by the four open-quadrant counts around the query point
(plus an exact angular sweep for disks).  Both are exact; the acceptance
suite checks them against each other on random instances.

Containment is STRICT (open objects) throughout this module: under general
position the only boundary incidences involve the query point itself, which
the pair-exclusion rule removes, so depth is constant on every cell of the
arrangement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, NamedTuple

from .errors import CoordinateTie, DimensionMismatch, GeoSelectError
from .families import ObjectFamily
from .points import AnyPoint, PointSet


class QuadrantCounts(NamedTuple):
    """Open-quadrant cardinalities around a query point.

    Convention: A = NW (x < px, y > py), B = NE, C = SE, D = SW.
    """

    A: int
    B: int
    C: int
    D: int


@dataclass
class DepthResult:
    query: tuple
    family: ObjectFamily
    depth: int
    engine: str  # "brute" | "fast"


# ---------------------------------------------------------------------------
# Exact scaled frames: predicates run on plain ints.  A rational query point
# with common denominator L is replaced by its numerator vector while every
# lattice point is scaled by L; all predicates here are homogeneous of even
# degree per axis or use one common scale, so signs are preserved.
# ---------------------------------------------------------------------------

def scaled_frame(points: Iterable[tuple], q: AnyPoint):
    dens = [c.denominator if isinstance(c, Fraction) else 1 for c in q]
    scale = 1
    for d in dens:
        scale = lcm(scale, d)
    if scale == 1:
        return [tuple(p) for p in points], tuple(int(c) for c in q)
    qs = tuple(int(c * scale) for c in q)
    return [tuple(c * scale for c in p) for p in points], qs


def _in_rect(a, b, p) -> bool:
    for k in range(len(p)):
        lo, hi = a[k], b[k]
        if hi < lo:
            lo, hi = hi, lo
        if not (lo < p[k] < hi):
            return False
    return True


def _in_vslab(a, b, p) -> bool:
    lo, hi = a[0], b[0]
    if hi < lo:
        lo, hi = hi, lo
    return lo < p[0] < hi


def _in_hslab(a, b, p) -> bool:
    lo, hi = a[1], b[1]
    if hi < lo:
        lo, hi = hi, lo
    return lo < p[1] < hi


def _in_skyline(a, b, p) -> bool:
    lo, hi = a[0], b[0]
    if hi < lo:
        lo, hi = hi, lo
    top = a[1] if a[1] > b[1] else b[1]
    return lo < p[0] < hi and p[1] < top


def _in_quadrant(a, b, p) -> bool:
    # All induced quadrants open toward +x, +y.  Apex is the componentwise
    # minimum of the pair, which reproduces both the decreasing-pair (rays
    # through both points) and increasing-pair (anchored at the lower-left
    # point) cases.
    ax = a[0] if a[0] < b[0] else b[0]
    ay = a[1] if a[1] < b[1] else b[1]
    return p[0] > ax and p[1] > ay


def _in_ball(a, b, p) -> bool:
    # Thales: p strictly inside the ball with a, b antipodal iff the angle
    # at p exceeds 90 degrees.
    s = 0
    for k in range(len(p)):
        s += (a[k] - p[k]) * (b[k] - p[k])
    return s < 0


def _in_downtri(a, b, p) -> bool:
    # Sheared-frame functionals c1 = -u-v, c2 = u, c3 = v (c1+c2+c3 = 0).
    # The minimal downward triangle through a, b is {z : c_i(z) < t_i} with
    # t_i = max(c_i(a), c_i(b)).
    c2 = max(a[0], b[0])
    c3 = max(a[1], b[1])
    c1 = max(-a[0] - a[1], -b[0] - b[1])
    return p[0] < c2 and p[1] < c3 and -p[0] - p[1] < c1


def _in_interval(a, b, p) -> bool:
    lo, hi = a[0], b[0]
    if hi < lo:
        lo, hi = hi, lo
    return lo < p[0] < hi


_PREDICATES = {
    ObjectFamily.RECTANGLE: _in_rect,
    ObjectFamily.BOX: _in_rect,
    ObjectFamily.VSLAB: _in_vslab,
    ObjectFamily.HSLAB: _in_hslab,
    ObjectFamily.SKYLINE: _in_skyline,
    ObjectFamily.QUADRANT: _in_quadrant,
    ObjectFamily.DISK: _in_ball,
    ObjectFamily.HYPERSPHERE: _in_ball,
    ObjectFamily.DOWN_TRIANGLE: _in_downtri,
    ObjectFamily.INTERVAL: _in_interval,
}


def contains(family: ObjectFamily, a: AnyPoint, b: AnyPoint, p: AnyPoint) -> bool:
    """Does the object induced by a, b strictly contain p?

    For SLAB_BOTH the result is True when p lies in at least one of the two
    induced slabs; use `slab_multiplicity` for the 0/1/2 count.
    """
    if len(a) != len(b) or len(a) != len(p):
        raise DimensionMismatch("mixed dimensions in containment test")
    if tuple(a) == tuple(b):
        raise GeoSelectError("inducing pair must be two distinct points")
    family.require(len(p))
    pts, q = scaled_frame((a, b), p)
    if family is ObjectFamily.SLAB_BOTH:
        return _in_vslab(pts[0], pts[1], q) or _in_hslab(pts[0], pts[1], q)
    return _PREDICATES[family](pts[0], pts[1], q)


def slab_multiplicity(a, b, p) -> int:
    pts, q = scaled_frame((a, b), p)
    return int(_in_vslab(pts[0], pts[1], q)) + int(_in_hslab(pts[0], pts[1], q))


# ---------------------------------------------------------------------------
# Quadrant counts
# ---------------------------------------------------------------------------

def quadrant_counts(ps: PointSet, p: AnyPoint) -> QuadrantCounts:
    """Open-quadrant counts of ps around p; p itself excluded when p is in ps.

    Raises CoordinateTie when any other point shares a coordinate with p:
    candidate points must be chosen off the grid lines.
    """
    if ps.dim != 2:
        raise DimensionMismatch("quadrant counts need d = 2")
    pts, q = scaled_frame(ps.points, p)
    px, py = q
    a = b = c = d = 0
    for s in pts:
        if s[0] == px and s[1] == py:
            continue  # p is a member of P; leave it out
        if s[0] == px or s[1] == py:
            raise CoordinateTie(f"point {s} shares a coordinate with query {p}")
        if s[0] < px:
            if s[1] > py:
                a += 1
            else:
                d += 1
        else:
            if s[1] > py:
                b += 1
            else:
                c += 1
    return QuadrantCounts(a, b, c, d)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def depth_brute(ps: PointSet, family: ObjectFamily, p: AnyPoint) -> DepthResult:
    """Count, over all unordered inducing pairs of ps minus p, the objects
    containing p.  This engine is the oracle: one predicate, all pairs.
    """
    family.require(ps.dim)
    pts, q = scaled_frame(ps.points, p)
    others = [s for s in pts if s != q]
    n = len(others)
    depth = 0
    if family is ObjectFamily.SLAB_BOTH:
        for i in range(n):
            a = others[i]
            for j in range(i + 1, n):
                b = others[j]
                if _in_vslab(a, b, q):
                    depth += 1
                if _in_hslab(a, b, q):
                    depth += 1
    else:
        pred = _PREDICATES[family]
        for i in range(n):
            a = others[i]
            for j in range(i + 1, n):
                if pred(a, others[j], q):
                    depth += 1
    return DepthResult(tuple(p), family, depth, "brute")


# ---------------------------------------------------------------------------
# Fast engines
# ---------------------------------------------------------------------------

def _half(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_lt(u, w) -> bool:
    hu, hw = _half(u), _half(w)
    if hu != hw:
        return hu < hw
    return u[0] * w[1] - u[1] * w[0] > 0


def _pos_lt(vs, d) -> int:
    lo, hi = 0, len(vs)
    while lo < hi:
        mid = (lo + hi) // 2
        if _angle_lt(vs[mid], d):
            lo = mid + 1
        else:
            hi = mid
    return lo


def _pos_le(vs, d) -> int:
    lo, hi = 0, len(vs)
    while lo < hi:
        mid = (lo + hi) // 2
        if not _angle_lt(d, vs[mid]):
            lo = mid + 1
        else:
            hi = mid
    return lo


def _count_open_arc(vs, a, b) -> int:
    """Vectors with angle strictly inside the CCW arc from a to b."""
    if _angle_lt(a, b):
        return _pos_lt(vs, b) - _pos_le(vs, a)
    return (len(vs) - _pos_le(vs, a)) + _pos_lt(vs, b)


def _disk_depth_sweep(vectors) -> int:
    """Unordered pairs of direction vectors at angle > 90 degrees (dot < 0)."""
    import functools

    vs = sorted(vectors, key=functools.cmp_to_key(
        lambda u, w: -1 if _angle_lt(u, w) else (1 if _angle_lt(w, u) else 0)))
    total = 0
    for v in vs:
        a = (-v[1], v[0])
        b = (v[1], -v[0])
        total += _count_open_arc(vs, a, b)
    assert total % 2 == 0
    return total // 2


def depth_fast(ps: PointSet, family: ObjectFamily, p: AnyPoint) -> DepthResult:
    """Closed-form depth from quadrant counts (angular sweep for disks).

    Exact binomial C(D, 2) replaces the asymptotic D^2/2 in the quadrant
    formula.  Agrees with depth_brute on every valid input.
    """
    if ps.dim != 2:
        raise DimensionMismatch("fast engines are planar (d = 2)")
    family.require(ps.dim)
    if family in (ObjectFamily.DISK, ObjectFamily.HYPERSPHERE):
        quadrant_counts(ps, p)  # enforce the same off-grid-lines precondition
        pts, q = scaled_frame(ps.points, p)
        vecs = [(s[0] - q[0], s[1] - q[1]) for s in pts if s != q]
        return DepthResult(tuple(p), family, _disk_depth_sweep(vecs), "fast")
    qc = quadrant_counts(ps, p)
    A, B, C, D = qc
    if family in (ObjectFamily.RECTANGLE, ObjectFamily.BOX):
        depth = A * C + B * D
    elif family is ObjectFamily.SLAB_BOTH:
        depth = 2 * (A * C + B * D) + (A + C) * (B + D)
    elif family is ObjectFamily.VSLAB:
        depth = (A + D) * (B + C)
    elif family is ObjectFamily.HSLAB:
        depth = (A + B) * (C + D)
    elif family is ObjectFamily.SKYLINE:
        depth = A * C + B * D + A * B
    elif family is ObjectFamily.QUADRANT:
        depth = comb(D, 2) + D * (A + B + C) + A * C
    else:
        raise GeoSelectError(f"no fast engine for family {family.value}")
    return DepthResult(tuple(p), family, depth, "fast")
