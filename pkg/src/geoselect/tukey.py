"""Centerpoints with exactly certified Tukey (halfspace) depth.

The Tukey depth of c is the minimum, over closed halfspaces containing c, of
the number of points inside.  A returned centerpoint always carries an exact
certificate: a lower bound on that minimum computed purely in integer
arithmetic, never below ceil(n / (d+1)).

Certification strategy: translate to direction space.  N(u) = #{p : (p-c).u
>= 0} is piecewise constant over unit directions u; its global minimum is
attained inside an open cell of the arrangement of the great circles
{u : (p-c).u = 0}.  In the plane the cell directions are enumerated exactly
(sums of consecutive critical directions), giving the exact depth.  In d >= 3
the certificate takes the minimum strict-positive count over all directions
spanned by (d-1)-subsets (plus the point directions themselves), which lower
bounds every cell value; rank-deficient inputs are reduced exactly to their
span first, so collinear and coplanar sets are handled exactly as well.

Candidates are proposed cheaply (coordinate-median midpoint, centroid,
iterated Radon points) and verified; in the plane the intersection points of
lines through point pairs are scanned as a guaranteed fallback.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb

from .errors import CapExceeded, CertificationFailed, DimensionMismatch
from .points import PointSet
from .depth import scaled_frame, _angle_lt

DEFAULT_CAPS = {2: 60, 3: 24, 4: 16}

_NUMPY_SAFE_ABS = 600_000  # |v| bound s.t. v * cross(v,v') stays inside int64


@dataclass
class CenterpointResult:
    point: tuple        # RationalPoint
    depth: int          # certified halfspace depth (exact lower bound)
    threshold: int      # the ceil(n/(d+1)) target it was certified against


# ---------------------------------------------------------------------------
# Exact linear algebra helpers (integer vectors, Fraction elimination)
# ---------------------------------------------------------------------------

def _integer_basis(vectors):
    """Row-reduce integer vectors; return a maximal independent subset."""
    basis = []
    rows = []
    for v in vectors:
        row = [Fraction(c) for c in v]
        for b in rows:
            piv = next(i for i, x in enumerate(b) if x != 0)
            if row[piv] != 0:
                f = row[piv] / b[piv]
                row = [r - f * x for r, x in zip(row, b)]
        if any(x != 0 for x in row):
            rows.append(row)
            basis.append(v)
    return basis


def _nullspace_vector(matrix, ncols):
    """One nonzero rational vector in the nullspace of the given rows."""
    rows = [list(map(Fraction, r)) for r in matrix]
    pivots = {}
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / prow[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots[col] = r
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    sol = [Fraction(0)] * ncols
    sol[free[0]] = Fraction(1)
    for col, prow in pivots.items():
        row = rows[prow]
        sol[col] = -row[free[0]] / row[col]
    return sol


# ---------------------------------------------------------------------------
# Exact minimum closed-halfspace counts per rank
# ---------------------------------------------------------------------------

def _depth_rank1(ts) -> int:
    pos = sum(1 for t in ts if t > 0)
    neg = sum(1 for t in ts if t < 0)
    return min(pos, neg)


def _depth_2d_exact(vs) -> int:
    """Exact min over directions u of #{v : v.u >= 0} for 2-d int vectors."""
    v0 = vs[0]
    if all(v0[0] * v[1] - v0[1] * v[0] == 0 for v in vs):
        return _depth_rank1([v0[0] * v[0] + v0[1] * v[1] for v in vs])
    crit = []
    for v in vs:
        crit.append((-v[1], v[0]))
        crit.append((v[1], -v[0]))
    crit.sort(key=functools.cmp_to_key(
        lambda u, w: -1 if _angle_lt(u, w) else (1 if _angle_lt(w, u) else 0)))
    dirs = [crit[0]]
    for w in crit[1:]:
        last = dirs[-1]
        if last[0] * w[1] - last[1] * w[0] == 0 and last[0] * w[0] + last[1] * w[1] > 0:
            continue
        dirs.append(w)
    best = None
    m = len(dirs)
    for i in range(m):
        w1, w2 = dirs[i], dirs[(i + 1) % m]
        u = (w1[0] + w2[0], w1[1] + w2[1])
        # ties: a zero sum would mean only two antipodal criticals (rank 1)
        count = sum(1 for v in vs if v[0] * u[0] + v[1] * u[1] > 0)
        if best is None or count < best:
            best = count
    return best


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _cross4(a, b, c):
    # Generalized cross product in R^4 via 3x3 minors.
    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    cols = range(4)
    out = []
    sign = 1
    for k in cols:
        minor = [[v[c] for c in cols if c != k] for v in (a, b, c)]
        out.append(sign * det3(minor))
        sign = -sign
    return tuple(out)


def _strict_positive_min(vs, directions) -> int:
    best = None
    for u in directions:
        if all(x == 0 for x in u):
            continue
        for uu in (u, tuple(-x for x in u)):
            count = 0
            for v in vs:
                s = 0
                for a, b in zip(v, uu):
                    s += a * b
                if s > 0:
                    count += 1
            if best is None or count < best:
                best = count
                if best == 0:
                    return 0
    return best if best is not None else len(vs)


def _cert_full_rank(vs, dim) -> int:
    """Sound lower bound on min_u N(u) for full-rank vs in dimension 3 or 4."""
    try:
        import numpy as np
        use_np = max(abs(c) for v in vs for c in v) <= _NUMPY_SAFE_ABS
    except ImportError:  # pragma: no cover
        use_np = False
    if dim == 3:
        dirs = [_cross3(a, b) for a, b in combinations(vs, 2)]
    else:
        dirs = [_cross4(a, b, c) for a, b, c in combinations(vs, 3)]
    dirs.extend(vs)
    if use_np and dim == 3:
        arr = np.array(vs, dtype=np.int64)
        ds = np.array([d for d in dirs if any(d)], dtype=np.int64)
        prods = ds @ arr.T  # (ndirs, npts)
        pos = (prods > 0).sum(axis=1)
        neg = (prods < 0).sum(axis=1)
        return int(min(pos.min(), neg.min()))
    return _strict_positive_min(vs, dirs)


def certified_halfspace_depth(points, c) -> int:
    """Exact lower bound on the closed-halfspace Tukey depth of c in points.

    Exact (not just a bound) for dimension <= 2 after rank reduction; a sound
    certificate for full-rank inputs in dimensions 3 and 4.
    """
    pts, q = scaled_frame(points, c)
    dim = len(q)
    vs = []
    zeros = 0
    for p in pts:
        v = tuple(a - b for a, b in zip(p, q))
        if all(x == 0 for x in v):
            zeros += 1
        else:
            vs.append(v)
    if not vs:
        return zeros
    basis = _integer_basis(vs)
    rank = len(basis)
    if rank == 1:
        e = basis[0]
        return zeros + _depth_rank1([sum(a * b for a, b in zip(v, e)) for v in vs])
    if rank == 2:
        ws = [tuple(sum(a * b for a, b in zip(v, e)) for e in basis) for v in vs]
        return zeros + _depth_2d_exact(ws)
    if rank == 3:
        if dim == 3:
            return zeros + _cert_full_rank(vs, 3)
        ws = [tuple(sum(a * b for a, b in zip(v, e)) for e in basis) for v in vs]
        return zeros + _cert_full_rank(ws, 3)
    return zeros + _cert_full_rank(vs, 4)


# ---------------------------------------------------------------------------
# Candidate proposal
# ---------------------------------------------------------------------------

def _snap(c, den=32):
    return tuple(Fraction(round(x * den), den) for x in c)


def _plane_normal(points, subset, dim):
    base = points[subset[0]]
    diffs = [tuple(points[i][k] - base[k] for k in range(dim)) for i in subset[1:]]
    if dim == 2:
        (dx, dy), = diffs
        return (-dy, dx)
    if dim == 3:
        return _cross3(*diffs)
    return _cross4(*diffs)


def _lp_center_proposal(points, dim, k):
    """Chebyshev center of the depth-k region.

    The region {c : every closed halfspace containing c has >= k points} is
    exactly the polytope cut out by the closed halfspaces at the (n-k+1)-th
    order statistic over the directions normal to d-point planes; constraints
    are assembled with exact integer counts and only the LP runs in floats.
    The exact verifier still has the final word on any proposed point.
    """
    try:
        import numpy as np
        from scipy.optimize import linprog
    except ImportError:  # pragma: no cover
        return None
    n = len(points)
    rows = []
    offs = []
    for subset in combinations(range(n), dim):
        a = _plane_normal(points, subset, dim)
        if all(x == 0 for x in a):
            continue
        b = sum(x * c for x, c in zip(a, points[subset[0]]))
        vals = [sum(x * c for x, c in zip(a, p)) for p in points]
        for sgn in (1, -1):
            bs = sgn * b
            strict = sum(1 for v in vals if sgn * v > bs)
            closed = sum(1 for v in vals if sgn * v >= bs)
            if strict <= n - k and closed >= n - k + 1:
                norm = float(sum((sgn * x) ** 2 for x in a)) ** 0.5
                rows.append([-sgn * x / norm for x in a] + [1.0])
                offs.append(-float(bs) / norm)
    if not rows:
        return None
    res = linprog(c=[0.0] * dim + [-1.0], A_ub=rows, b_ub=offs,
                  bounds=[(None, None)] * dim + [(0.0, None)],
                  method="highs")
    if not res.success:
        return None
    return tuple(res.x[:dim])


def _coordinate_median(points, dim):
    out = []
    n = len(points)
    for axis in range(dim):
        vals = sorted(p[axis] for p in points)
        if n % 2 == 1:
            out.append(Fraction(vals[n // 2]))
        else:
            out.append(Fraction(vals[n // 2 - 1] + vals[n // 2], 2))
    return tuple(out)


def _radon_point(pts):
    """Radon point of d+2 points in R^d (exact rational)."""
    dim = len(pts[0])
    rows = [[Fraction(p[k]) for p in pts] for k in range(dim)]
    rows.append([Fraction(1)] * len(pts))
    lam = _nullspace_vector(rows, len(pts))
    if lam is None:
        return None
    pos = [(l, p) for l, p in zip(lam, pts) if l > 0]
    if not pos:
        pos = [(-l, p) for l, p in zip(lam, pts) if l < 0]
    total = sum(l for l, _ in pos)
    if total == 0:
        return None
    return tuple(sum(l * Fraction(p[k]) for l, p in pos) / total for k in range(dim))


def _proposals(ps: PointSet, rng: random.Random, budget: int, threshold: int):
    n, dim = len(ps), ps.dim
    pts = ps.points
    yield _coordinate_median(pts, dim)
    centroid = tuple(Fraction(sum(p[k] for p in pts), n) for k in range(dim))
    yield _snap(centroid)
    yield centroid
    lp = _lp_center_proposal(pts, dim, threshold)
    if lp is not None:
        for den in (32, 1024, 2 ** 16, 2 ** 28):
            yield _snap(lp, den)
    if n >= dim + 2:
        pool = [tuple(Fraction(c) for c in p) for p in pts]
        acc = None
        count = 0
        for _ in range(budget):
            sample = rng.sample(pool, dim + 2)
            r = _radon_point(sample)
            if r is None:
                continue
            pool[rng.randrange(len(pool))] = r
            count += 1
            if acc is None:
                acc = list(r)
            else:
                acc = [a + b for a, b in zip(acc, r)]
            yield _snap(r)
            if count % 8 == 0:
                mean = tuple(a / count for a in acc)
                yield _snap(mean)
                yield mean
    if dim == 2:
        # Guaranteed fallback: intersection points of lines through point
        # pairs (the center region's vertices live here).
        lines = list(combinations(range(n), 2))
        for (i1, j1), (i2, j2) in combinations(lines, 2):
            p1, q1 = pts[i1], pts[j1]
            p2, q2 = pts[i2], pts[j2]
            d1 = (q1[0] - p1[0], q1[1] - p1[1])
            d2 = (q2[0] - p2[0], q2[1] - p2[1])
            den = d1[0] * d2[1] - d1[1] * d2[0]
            if den == 0:
                continue
            t = Fraction((p2[0] - p1[0]) * d2[1] - (p2[1] - p1[1]) * d2[0], den)
            yield (Fraction(p1[0]) + t * d1[0], Fraction(p1[1]) + t * d1[1])


def tukey_centerpoint(ps: PointSet, cap: int | None = None,
                      budget: int = 160, seed: int = 0) -> CenterpointResult:
    """A rational point with certified Tukey depth >= ceil(n / (d+1)).

    Never returns an uncertified point: every candidate passes the exact
    integer verifier before being accepted.  Raises CertificationFailed if
    the proposal budget is exhausted (enlarge the budget and retry).
    """
    dim, n = ps.dim, len(ps)
    if not 2 <= dim <= 4:
        raise DimensionMismatch("tukey_centerpoint supports 2 <= d <= 4")
    limit = cap if cap is not None else DEFAULT_CAPS[dim]
    if n > limit:
        raise CapExceeded(f"n={n} exceeds cap {limit} for d={dim}")
    threshold = ceil(Fraction(n, dim + 1))
    rng = random.Random(seed)
    tried = 0
    seen = set()
    for cand in _proposals(ps, rng, budget, threshold):
        key = tuple(cand)
        if key in seen:
            continue
        seen.add(key)
        depth = certified_halfspace_depth(ps.points, cand)
        if depth >= threshold:
            return CenterpointResult(tuple(cand), depth, threshold)
        tried += 1
        if tried >= budget and dim != 2:
            break
        if tried >= max(budget, 4 * comb(comb(n, 2), 2)):  # pragma: no cover
            break
    raise CertificationFailed(
        f"no candidate certified depth >= {threshold} within budget {budget}")
