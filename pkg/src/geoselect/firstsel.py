"""Piercing-point finders for the first selection lemma, one per bound.

Strong finders return members of P; weak finders return rational points.
Every lower-bound construction is paired with exact depth evaluation, and the
verification harness compares observed depths against c*n^2 -+ s*n bounds
with explicit integer slack (the closed-form bounds assume divisibility, so
each is encoded as a coefficient plus a linear allowance).

Tie-breaking is everywhere by smallest point index, for determinism.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, isqrt

import numpy as np

from .depth import DepthResult, contains, depth_brute, depth_fast, scaled_frame
from .errors import (CapExceeded, CoordinateTie, DimensionMismatch,
                     GeoSelectError, NotFound, NotSymmetric)
from .families import ObjectFamily
from .points import PointSet
from .tukey import CenterpointResult, tukey_centerpoint

DISK_WEAK_CAP = 48
_SNAP_DEN = 4096  # snap grid for circle-intersection candidates


class Variant(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"


@dataclass
class PiercingResult:
    point: tuple
    depth: int
    certificate: str = ""


_FAST_FAMILIES = {
    ObjectFamily.RECTANGLE, ObjectFamily.QUADRANT, ObjectFamily.VSLAB,
    ObjectFamily.HSLAB, ObjectFamily.SLAB_BOTH, ObjectFamily.SKYLINE,
    ObjectFamily.DISK, ObjectFamily.HYPERSPHERE,
}


def depth_at(ps: PointSet, family: ObjectFamily, p) -> int:
    """Depth via the fast engine when available, oracle otherwise."""
    if ps.dim == 2 and family in _FAST_FAMILIES:
        try:
            return depth_fast(ps, family, p).depth
        except CoordinateTie:
            pass
    return depth_brute(ps, family, p).depth


# ---------------------------------------------------------------------------
# Strong maximum (exact over members of P)
# ---------------------------------------------------------------------------

def strong_max(ps: PointSet, family: ObjectFamily) -> PiercingResult:
    family.require(ps.dim)
    best = None
    for i, p in enumerate(ps.points):
        d = depth_at(ps, family, p)
        if best is None or d > best[0]:
            best = (d, i)
    d, i = best
    return PiercingResult(ps.points[i], d, f"strong max at index {i}")


# ---------------------------------------------------------------------------
# Weak maximum: exact cell sweeps for axis-parallel families, the corner
# point for quadrants, bottom-row cells for skylines, circle-arrangement
# candidates for disks, midpoint candidates for hyperspheres.
# ---------------------------------------------------------------------------

def _axis_cells(values):
    """Sorted unique axis values plus a boundary sample per cell (0..U)."""
    uniq = sorted(set(values))
    samples = [uniq[0] - 1]
    for a, b in zip(uniq, uniq[1:]):
        samples.append(Fraction(a + b, 2))
    samples.append(uniq[-1] + 1)
    return uniq, samples


def _prefix_2d(ps):
    xs, x_samples = _axis_cells([p[0] for p in ps.points])
    ys, y_samples = _axis_cells([p[1] for p in ps.points])
    ux, uy = len(xs), len(ys)
    xr = {v: i for i, v in enumerate(xs)}
    yr = {v: i for i, v in enumerate(ys)}
    occ = np.zeros((ux, uy), dtype=np.int64)
    for p in ps.points:
        occ[xr[p[0]], yr[p[1]]] += 1
    pref = np.zeros((ux + 1, uy + 1), dtype=np.int64)
    pref[1:, 1:] = occ.cumsum(0).cumsum(1)
    return pref, x_samples, y_samples


def _quadrant_grids(ps):
    """Quadrant-count arrays A, B, C, D over all (ux+1) x (uy+1) cells."""
    pref, x_samples, y_samples = _prefix_2d(ps)
    n = len(ps)
    left = pref[:, -1][:, None]
    below = pref[-1, :][None, :]
    dd = pref
    aa = left - pref
    cc = below - pref
    bb = n - aa - cc - dd
    return aa, bb, cc, dd, x_samples, y_samples


_CELL_FORMULAS = {
    ObjectFamily.RECTANGLE: lambda A, B, C, D: A * C + B * D,
    ObjectFamily.BOX: lambda A, B, C, D: A * C + B * D,
    ObjectFamily.VSLAB: lambda A, B, C, D: (A + D) * (B + C),
    ObjectFamily.HSLAB: lambda A, B, C, D: (A + B) * (C + D),
    ObjectFamily.SLAB_BOTH: lambda A, B, C, D: 2 * (A * C + B * D) + (A + C) * (B + D),
}


def _weak_axis_parallel_2d(ps: PointSet, family: ObjectFamily) -> PiercingResult:
    aa, bb, cc, dd, x_samples, y_samples = _quadrant_grids(ps)
    depth = _CELL_FORMULAS[family](aa, bb, cc, dd)
    flat = int(np.argmax(depth))
    cx, cy = divmod(flat, depth.shape[1])
    point = (x_samples[cx], y_samples[cy])
    return PiercingResult(point, int(depth[cx, cy]),
                          f"grid cell sweep over {depth.shape[0]}x{depth.shape[1]} cells")


def _weak_skyline(ps: PointSet) -> PiercingResult:
    # Depth only grows moving down within a column, so the bottom-row cells
    # (mid_x, y_min - 1) realize the weak maximum.
    xs, x_samples = _axis_cells([p[0] for p in ps.points])
    y_low = min(p[1] for p in ps.points) - 1
    n = len(ps)
    ranks = sorted(p[0] for p in ps.points)
    best = None
    for cx, sample in enumerate(x_samples):
        lefts = bisect_left(ranks, sample)
        d = lefts * (n - lefts)
        if best is None or d > best[0]:
            best = (d, cx, sample)
    d, cx, sample = best
    return PiercingResult((sample, y_low), d, "skyline bottom-row sweep")


def _weak_box_3d(ps: PointSet) -> PiercingResult:
    axes = []
    for k in range(3):
        uniq, samples = _axis_cells([p[k] for p in ps.points])
        axes.append((uniq, {v: i for i, v in enumerate(uniq)}, samples))
    shape = tuple(len(a[0]) for a in axes)
    occ = np.zeros(shape, dtype=np.int64)
    for p in ps.points:
        occ[axes[0][1][p[0]], axes[1][1][p[1]], axes[2][1][p[2]]] += 1
    pref = np.zeros(tuple(s + 1 for s in shape), dtype=np.int64)
    pref[1:, 1:, 1:] = occ.cumsum(0).cumsum(1).cumsum(2)
    n = len(ps)
    pxy = pref[:, :, -1]
    pxz = pref[:, -1, :]
    pyz = pref[-1, :, :]
    px = pref[:, -1, -1]
    py = pref[-1, :, -1]
    pz = pref[-1, -1, :]
    mmm = pref
    mmp = pxy[:, :, None] - pref
    mpm = pxz[:, None, :] - pref
    pmm = pyz[None, :, :] - pref
    mpp = px[:, None, None] - pxy[:, :, None] - pxz[:, None, :] + pref
    pmp = py[None, :, None] - pxy[:, :, None] - pyz[None, :, :] + pref
    ppm = pz[None, None, :] - pxz[:, None, :] - pyz[None, :, :] + pref
    ppp = n - (mmm + mmp + mpm + pmm + mpp + pmp + ppm)
    depth = mmm * ppp + mmp * ppm + mpm * pmp + pmm * mpp
    flat = int(np.argmax(depth))
    idx = np.unravel_index(flat, depth.shape)
    point = tuple(axes[k][2][idx[k]] for k in range(3))
    return PiercingResult(point, int(depth[idx]), "3-d grid cell sweep")


def _weak_disk(ps: PointSet, cap: int) -> PiercingResult:
    """Best depth over the circle-arrangement candidate set (lower envelope).

    Candidates: pairwise intersection points of the induced circles, all
    circle centers, and the points of P, each replaced by its 4 diagonal
    perturbations.  Candidates are snapped to the 1/Q rational grid, so the
    minimum nonzero candidate separation is at least 1/Q exactly and the
    perturbation magnitude 1/(4Q) sits strictly below it.
    """
    n = len(ps)
    if n > cap:
        raise CapExceeded(f"disk weak search capped at n={cap}")
    import math

    pts = ps.points
    raw = [(float(x), float(y)) for x, y in pts]
    circles = []
    for i in range(n):
        for j in range(i + 1, n):
            cx = (raw[i][0] + raw[j][0]) / 2.0
            cy = (raw[i][1] + raw[j][1]) / 2.0
            dx = raw[i][0] - raw[j][0]
            dy = raw[i][1] - raw[j][1]
            circles.append((cx, cy, (dx * dx + dy * dy) / 4.0))
    cand = [(float(x), float(y)) for x, y in pts]
    cand.extend((c[0], c[1]) for c in circles)
    for a in range(len(circles)):
        x1, y1, r1sq = circles[a]
        for b in range(a + 1, len(circles)):
            x2, y2, r2sq = circles[b]
            ex, ey = x2 - x1, y2 - y1
            d2 = ex * ex + ey * ey
            if d2 <= 0.0:
                continue
            t = (r1sq - r2sq + d2) / (2.0 * d2)
            h2 = r1sq / d2 - t * t
            if h2 < 0.0:
                continue
            h = math.sqrt(h2)
            bx, by = x1 + t * ex, y1 + t * ey
            cand.append((bx - h * ey, by + h * ex))
            cand.append((bx + h * ey, by - h * ex))
    q = _SNAP_DEN
    eps = Fraction(1, 4 * q)
    snapped = sorted({(Fraction(round(x * q), q), Fraction(round(y * q), q))
                      for x, y in cand})
    scale = 4 * q
    ipts = [(x * scale, y * scale) for x, y in pts]
    best = None
    for sx, sy in snapped:
        for dx in (-1, 1):
            for dy in (-1, 1):
                qx = int((sx + dx * eps) * scale)
                qy = int((sy + dy * eps) * scale)
                d = 0
                vs = [(px - qx, py - qy) for px, py in ipts]
                for i in range(n):
                    vx, vy = vs[i]
                    for j in range(i + 1, n):
                        if vx * vs[j][0] + vy * vs[j][1] < 0:
                            d += 1
                if best is None or d > best[0]:
                    best = (d, Fraction(qx, scale), Fraction(qy, scale))
    d, qx, qy = best
    return PiercingResult((qx, qy), d,
                          f"circle-arrangement candidates ({len(snapped)} vertices)")


def _weak_hypersphere(ps: PointSet, cap: int | None) -> PiercingResult:
    """Best depth over centerpoint, points of P, and all pairwise midpoints."""
    pts = ps.points
    cands = []
    try:
        cands.append(hypersphere_weak_point(ps, cap=cap).point)
    except (CapExceeded, DimensionMismatch):
        pass
    cands.extend(pts)
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            cands.append(tuple(Fraction(a + b, 2) for a, b in zip(pts[i], pts[j])))
    fam = ObjectFamily.HYPERSPHERE
    best = None
    for c in cands:
        d = depth_brute(ps, fam, c).depth
        if best is None or d > best[0]:
            best = (d, tuple(c))
    return PiercingResult(best[1], best[0],
                          "hypersphere candidates: centerpoint, points, midpoints")


def weak_max(ps: PointSet, family: ObjectFamily, disk_cap: int = DISK_WEAK_CAP,
             tukey_cap: int | None = None) -> PiercingResult:
    """A point maximizing depth over the family's candidate set.

    Exact for axis-parallel families (depth is cellwise constant, so the
    grid-cell samples cover every combinatorially distinct open cell) and for
    quadrants/skylines; for disks the result is a verified lower envelope of
    the true maximum over the documented candidate set.
    """
    family.require(ps.dim)
    n = len(ps)
    if family is ObjectFamily.QUADRANT:
        p = (max(q[0] for q in ps.points) + 1, max(q[1] for q in ps.points) + 1)
        d = depth_brute(ps, family, p).depth
        assert d == comb(n, 2)
        return PiercingResult(p, d, "corner point dominates all induced quadrants")
    if family is ObjectFamily.SKYLINE:
        return _weak_skyline(ps)
    if family in _CELL_FORMULAS and ps.dim == 2:
        return _weak_axis_parallel_2d(ps, family)
    if family is ObjectFamily.BOX:
        if ps.dim == 3:
            return _weak_box_3d(ps)
        raise GeoSelectError("box cell sweep implemented for d <= 3; "
                             "use box_point_recursive for higher d")
    if family is ObjectFamily.DISK:
        return _weak_disk(ps, disk_cap)
    if family is ObjectFamily.HYPERSPHERE:
        return _weak_hypersphere(ps, tukey_cap)
    if family is ObjectFamily.INTERVAL:
        vals = sorted(p[0] for p in ps.points)
        best = None
        for i in range(len(vals) + 1):
            if i == 0:
                sample = vals[0] - 1
            elif i == len(vals):
                sample = vals[-1] + 1
            else:
                sample = Fraction(vals[i - 1] + vals[i], 2)
            d = i * (len(vals) - i)
            if best is None or d > best[0]:
                best = (d, sample)
        return PiercingResult((best[1],), best[0], "interval gap sweep")
    raise GeoSelectError(f"no weak search for family {family.value} in d={ps.dim}")


# ---------------------------------------------------------------------------
# Constructive strong points
# ---------------------------------------------------------------------------

def _halfplane_counts(ps: PointSet, p):
    left = right = below = above = 0
    for q in ps.points:
        if q == p:
            continue
        if q[0] < p[0]:
            left += 1
        elif q[0] > p[0]:
            right += 1
        if q[1] < p[1]:
            below += 1
        elif q[1] > p[1]:
            above += 1
    return left, right, below, above


def strong_rect_centerpoint(ps: PointSet) -> tuple:
    """A member of P pierced by every axis-parallel rectangle holding more
    than 3n/4 points: each of its four open halfplanes has <= floor(3n/4)
    points (a rectangle avoiding p lies inside one of them).

    Scans for the point minimizing the largest halfplane count.
    """
    if ps.dim != 2:
        raise DimensionMismatch("strong rect centerpoint is planar")
    n = len(ps)
    best = None
    for i, p in enumerate(ps.points):
        worst = max(_halfplane_counts(ps, p))
        if best is None or worst < best[0]:
            best = (worst, i)
    worst, i = best
    if worst > (3 * n) // 4:
        raise NotFound("no point with all four halfplane counts <= 3n/4; "
                       "input corrupt (existence is guaranteed)")
    return ps.points[i]


def quadrant_strong_point(ps: PointSet) -> tuple:
    """A member of P contained in every induced quadrant holding more than
    n/2 points: at least ceil(n/2)-1 points lie strictly left of it and
    strictly below it, so any quadrant avoiding it has <= floor(n/2) points.
    """
    if ps.dim != 2:
        raise DimensionMismatch("quadrant strong point is planar")
    n = len(ps)
    t = ceil(n / 2) - 1
    for i, p in enumerate(ps.points):
        left, right, below, above = _halfplane_counts(ps, p)
        if left >= t and below >= t:
            return p
    raise NotFound("region right of v and above h is provably nonempty")


def skyline_strong_point(ps: PointSet) -> tuple:
    """A member of P contained in every skyline holding more than 2n/3
    points: it has >= ceil(n/3)-1 points strictly on each side and strictly
    above it (the middle vertical slab below the top line).  Among the
    qualifying points the one of maximum skyline depth is returned.
    """
    if ps.dim != 2:
        raise DimensionMismatch("skyline strong point is planar")
    n = len(ps)
    if n < 3:
        raise GeoSelectError("skyline strong point needs n >= 3")
    t = ceil(n / 3) - 1
    best = None
    for i, p in enumerate(ps.points):
        left, right, below, above = _halfplane_counts(ps, p)
        if left >= t and right >= t and above >= t:
            d = depth_at(ps, ObjectFamily.SKYLINE, p)
            if best is None or d > best[0]:
                best = (d, i)
    if best is None:
        raise NotFound("middle slab below the top line is provably nonempty")
    return ps.points[best[1]]


# ---------------------------------------------------------------------------
# Hyperspheres
# ---------------------------------------------------------------------------

def is_origin_symmetric(ps: PointSet) -> bool:
    pts = set(ps.points)
    return all(tuple(-c for c in p) in pts for p in pts)


def hypersphere_weak_point(ps: PointSet, cap: int | None = None,
                           seed: int = 0) -> PiercingResult:
    """The centerpoint (the origin for centrally symmetric sets) with its
    exact diametral-hypersphere depth.  Strict counting loses only the
    right-angle boundary pairs, absorbed by the O(n) slack downstream.
    """
    fam = ObjectFamily.HYPERSPHERE
    fam.require(ps.dim)
    if is_origin_symmetric(ps):
        c = tuple(0 for _ in range(ps.dim))
        cert = "origin of centrally symmetric set"
    else:
        res = tukey_centerpoint(ps, cap=cap, seed=seed)
        c = res.point
        cert = f"tukey centerpoint, certified depth {res.depth}"
    d = depth_brute(ps, fam, c).depth
    return PiercingResult(c, d, cert)


def symmetric_peel(ps: PointSet) -> tuple:
    """Peel symmetric pairs outward-in; a member of the last pair is inside
    at least (n/2 - 1)^2 / 2 induced disks (exact form of the asymptotic
    n^2/8 guarantee).

    Requires central symmetry, even n, and pairwise-distinct pair radii (the
    strict-containment argument needs every peeled disk to strictly contain
    the remaining points; equal radii put points on the boundary).
    """
    if ps.dim != 2:
        raise DimensionMismatch("symmetric peeling is planar")
    n = len(ps)
    if n % 2 != 0 or not is_origin_symmetric(ps):
        raise NotSymmetric("point set must be centrally symmetric with even n")
    index_of = {p: i for i, p in enumerate(ps.points)}
    pairs = {}
    for p in ps.points:
        neg = tuple(-c for c in p)
        key = min(p, neg)
        pairs.setdefault(key, p)
    norms = {}
    for rep in pairs:
        r = rep[0] * rep[0] + rep[1] * rep[1]
        if r in norms:
            raise NotSymmetric("pair radii must be pairwise distinct for the "
                               "strict peeling guarantee")
        norms[r] = rep
    remaining = list(ps.points)
    last_pair = None
    while remaining:
        far = min(remaining,
                  key=lambda p: (-(p[0] * p[0] + p[1] * p[1]), index_of[p]))
        neg = tuple(-c for c in far)
        rest = [p for p in remaining if p != far and p != neg]
        for q in rest:
            # the peeled disk is centered at the origin; strict containment
            # is |q| < |far|
            assert q[0] * q[0] + q[1] * q[1] < far[0] * far[0] + far[1] * far[1]
        last_pair = (far, neg)
        remaining = rest
    a, b = last_pair
    return a if index_of[a] < index_of[b] else b


# ---------------------------------------------------------------------------
# Boxes in higher dimensions
# ---------------------------------------------------------------------------

def _max_open_stabbing(intervals):
    """Point of maximum open-interval stabbing, scanned over gap midpoints."""
    if not intervals:
        return Fraction(0), 0
    lefts = sorted(l for l, _ in intervals)
    rights = sorted(r for _, r in intervals)
    events = sorted(set(lefts) | set(rights))
    best = None
    for a, b in zip(events, events[1:]):
        t = Fraction(a + b, 2)
        count = bisect_left(lefts, t) - bisect_right(rights, t)
        if best is None or count > best[1]:
            best = (t, count)
    if best is None:  # single event value; all intervals degenerate
        return Fraction(events[0]), 0
    return best


def box_point_recursive(ps: PointSet, cap: int | None = None) -> PiercingResult:
    """Induction on dimension: solve the projected (d-1)-dimensional problem,
    keep the boxes whose projections contain that point, project them onto
    the last axis, and stab the interval system at its best open point.

    Certified: depth >= n^2 / 2^(2^d - 1) - O(n).
    """
    fam = ObjectFamily.BOX
    fam.require(ps.dim)
    if cap is not None and len(ps) > cap:
        raise CapExceeded(f"box recursion capped at n={cap}")
    if ps.dim == 2:
        res = _weak_axis_parallel_2d(ps, ObjectFamily.RECTANGLE)
        return PiercingResult(res.point, res.depth, "base case: rectangle cell sweep")
    proj = PointSet(ps.dim - 1, [p[:-1] for p in ps.points],
                    coord_bound=ps.coord_bound)
    sub = box_point_recursive(proj)
    q = sub.point
    pts_scaled, q_scaled = scaled_frame([p[:-1] for p in ps.points], q)
    n = len(ps)
    intervals = []
    for i in range(n):
        for j in range(i + 1, n):
            a, b = pts_scaled[i], pts_scaled[j]
            ok = True
            for k in range(ps.dim - 1):
                lo, hi = a[k], b[k]
                if hi < lo:
                    lo, hi = hi, lo
                if not (lo < q_scaled[k] < hi):
                    ok = False
                    break
            if ok:
                lo = ps.points[i][-1]
                hi = ps.points[j][-1]
                if hi < lo:
                    lo, hi = hi, lo
                intervals.append((lo, hi))
    t, count = _max_open_stabbing(intervals)
    point = tuple(q) + (t,)
    return PiercingResult(point, count,
                          f"recursion: {len(intervals)} boxes over the sub-point, "
                          f"stabbed {count} on the last axis")


# ---------------------------------------------------------------------------
# Bound verification harness
# ---------------------------------------------------------------------------

@dataclass
class BoundSpec:
    family: ObjectFamily
    variant: Variant
    coefficient: Fraction        # bound = coefficient * n^2
    slack: Fraction              # linear allowance s: required = c*n^2 -+ s*n
    side: str = "lower"          # "lower" bound or "upper" witness
    symmetric: bool = False      # centrally symmetric instance family


@dataclass
class BoundCheck:
    spec: BoundSpec
    n: int
    d: int
    observed: int
    required: Fraction
    holds: bool
    point: tuple
    seed: int | None = None

    def record(self) -> dict:
        c = self.spec.coefficient
        return {
            "family": self.spec.family.value,
            "variant": self.spec.variant.value,
            "side": self.spec.side,
            "n": self.n,
            "d": self.d,
            "coefficient": f"{c.numerator}/{c.denominator}",
            "coefficient_float": float(c),
            "slack": str(self.spec.slack),
            "observed": self.observed,
            "required": f"{self.required.numerator}/{self.required.denominator}",
            "required_float": float(self.required),
            "holds": self.holds,
            "point": [str(c) for c in self.point],
            "seed": self.seed,
        }


def _finder_for(ps: PointSet, spec: BoundSpec, tukey_cap, seed) -> PiercingResult:
    fam, variant = spec.family, spec.variant
    if spec.side == "upper":
        if variant is Variant.STRONG:
            return strong_max(ps, fam)
        return weak_max(ps, fam, tukey_cap=tukey_cap)
    if variant is Variant.STRONG:
        if fam in (ObjectFamily.RECTANGLE, ObjectFamily.SLAB_BOTH):
            p = strong_rect_centerpoint(ps)
            return PiercingResult(p, depth_at(ps, fam, p), "strong rect-centerpoint")
        if fam is ObjectFamily.DISK:
            if spec.symmetric:
                p = symmetric_peel(ps)
                return PiercingResult(p, depth_at(ps, fam, p), "symmetric peeling")
            p = strong_rect_centerpoint(ps)
            return PiercingResult(p, depth_at(ps, fam, p),
                                  "strong rect-centerpoint (rectangle inside disk)")
        if fam is ObjectFamily.QUADRANT:
            p = quadrant_strong_point(ps)
            return PiercingResult(p, depth_at(ps, fam, p), "orthant strong centerpoint")
        if fam is ObjectFamily.SKYLINE:
            p = skyline_strong_point(ps)
            return PiercingResult(p, depth_at(ps, fam, p), "skyline strong centerpoint")
        return strong_max(ps, fam)
    # weak lower bounds
    if fam in (ObjectFamily.DISK, ObjectFamily.HYPERSPHERE) and spec.symmetric:
        return hypersphere_weak_point(ps, cap=tukey_cap, seed=seed or 0)
    if fam is ObjectFamily.HYPERSPHERE:
        return hypersphere_weak_point(ps, cap=tukey_cap, seed=seed or 0)
    if fam is ObjectFamily.BOX and ps.dim >= 3:
        return box_point_recursive(ps)
    return weak_max(ps, fam, tukey_cap=tukey_cap)


def verify_first_selection(ps: PointSet, spec: BoundSpec, seed: int | None = None,
                           tukey_cap: int | None = None) -> BoundCheck:
    """Run the matching finder and compare its depth against the bound."""
    spec.family.require(ps.dim)
    n = len(ps)
    res = _finder_for(ps, spec, tukey_cap, seed)
    if spec.side == "lower":
        required = spec.coefficient * n * n - spec.slack * n
        holds = res.depth >= required
    else:
        required = spec.coefficient * n * n + spec.slack * n
        holds = res.depth <= required
    return BoundCheck(spec, n, ps.dim, res.depth, required, holds,
                      tuple(res.point), seed)


def table1_spec(family: ObjectFamily, variant: Variant, d: int = 2,
                symmetric: bool = False) -> BoundSpec:
    """Default lower-bound spec per family and variant (the bound registry)."""
    F, V = ObjectFamily, Variant
    key = (family, variant, symmetric)
    if key == (F.RECTANGLE, V.STRONG, False):
        return BoundSpec(family, variant, Fraction(1, 16), Fraction(2))
    if key == (F.RECTANGLE, V.WEAK, False):
        return BoundSpec(family, variant, Fraction(1, 8), Fraction(2))
    if key == (F.QUADRANT, V.STRONG, False):
        return BoundSpec(family, variant, Fraction(1, 4), Fraction(2))
    if key == (F.QUADRANT, V.WEAK, False):
        return BoundSpec(family, variant, Fraction(1, 2), Fraction(1))
    if key == (F.SLAB_BOTH, V.STRONG, False):
        return BoundSpec(family, variant, Fraction(3, 8), Fraction(3))
    if key == (F.SLAB_BOTH, V.WEAK, False):
        return BoundSpec(family, variant, Fraction(1, 2), Fraction(1))
    if key == (F.SKYLINE, V.STRONG, False):
        return BoundSpec(family, variant, Fraction(1, 9), Fraction(2))
    if key == (F.SKYLINE, V.WEAK, False):
        return BoundSpec(family, variant, Fraction(1, 4), Fraction(1))
    if key == (F.DISK, V.STRONG, False):
        return BoundSpec(family, variant, Fraction(1, 16), Fraction(2))
    if key == (F.DISK, V.WEAK, False):
        # Table row with no in-text proof; verified empirically, advisory.
        return BoundSpec(family, variant, Fraction(1, 6), Fraction(1))
    if key == (F.DISK, V.STRONG, True):
        return BoundSpec(family, variant, Fraction(1, 8), Fraction(1, 2),
                         symmetric=True)
    if key == (F.DISK, V.WEAK, True) or key == (F.HYPERSPHERE, V.WEAK, True):
        return BoundSpec(family, variant, Fraction(1, 4), Fraction(1),
                         symmetric=True)
    if key == (F.HYPERSPHERE, V.WEAK, False):
        return BoundSpec(family, variant, Fraction(1, 2 * (d + 1)), Fraction(1))
    if key == (F.BOX, V.WEAK, False):
        return BoundSpec(family, variant, Fraction(1, 2 ** (2 ** d - 1)), Fraction(2))
    raise GeoSelectError(f"no Table-1 entry for {family.value}/{variant.value}"
                         f"{' symmetric' if symmetric else ''}")
