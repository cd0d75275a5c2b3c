"""Second selection lemma engines.

Given an arbitrary m-sized subset S of the induced objects, these engines
locate points pierced by many members of S: a sorted sweep for intervals on
the line, and a difference-array double count over the n^2 grid G (the
horizontal and vertical lines through every point) for rectangles, with the
per-partition cubic bound sum_{r in X_i'} J_r >= (m_i')^3 / 6.

Counting convention: CLOSED containment for all I/J counts in this module
(endpoints and boundary grid points included); both sides of every double
count use the same convention.  The strict convention of the first-selection
engines does not apply here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np

from .depth import _PREDICATES
from .errors import GeoSelectError, InvalidRange, MTooLarge
from .families import ObjectFamily
from .points import PointSet


@dataclass
class InducedSubset:
    base: PointSet
    pairs: list            # unordered index pairs (i, j), i != j
    family: ObjectFamily

    def __post_init__(self):
        seen = set()
        n = len(self.base)
        for i, j in self.pairs:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise GeoSelectError(f"bad index pair ({i}, {j})")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GeoSelectError(f"duplicate pair {key}")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.pairs)


def sample_subset(ps: PointSet, family: ObjectFamily, m: int, seed: int) -> InducedSubset:
    """Uniform m-subset of the induced objects, deterministic in seed."""
    total = comb(len(ps), 2)
    if m > total:
        raise MTooLarge(f"m={m} exceeds C(n,2)={total}")
    rng = random.Random(seed)
    all_pairs = list(combinations(range(len(ps)), 2))
    return InducedSubset(ps, sorted(rng.sample(all_pairs, m)), family)


def dump_subset(sub: InducedSubset, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"pairs {sub.m}\n")
        for i, j in sub.pairs:
            fh.write(f"{i} {j}\n")


def load_subset(ps: PointSet, family: ObjectFamily, path) -> InducedSubset:
    pairs = []
    m = None
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if m is None:
                head = line.split()
                if len(head) != 2 or head[0] != "pairs":
                    raise GeoSelectError(f"expected 'pairs <m>' header, got {line!r}")
                m = int(head[1])
                continue
            i, j = line.split()
            pairs.append((int(i), int(j)))
    if m is None or len(pairs) != m:
        raise GeoSelectError("subset file truncated")
    return InducedSubset(ps, pairs, family)


# ---------------------------------------------------------------------------
# Intervals on the line
# ---------------------------------------------------------------------------

@dataclass
class IntervalProfile:
    counts: list           # I_p per point index of the base set
    max_index: int         # point index attaining the max (smallest rank wins)
    max_value: int
    bound: Fraction        # m^2/(2n^2) + 3m/(2n) - 1 (integrality slack 1)
    holds: bool
    unslacked: Fraction    # the lemma value without the -1 slack


def interval_depth_profile(ps: PointSet, sub: InducedSubset) -> IntervalProfile:
    """Closed containment counts I_p for every p of the 1-d base set."""
    if ps.dim != 1:
        raise GeoSelectError("interval profile needs a 1-d point set")
    n = len(ps)
    order = sorted(range(n), key=lambda i: ps.points[i][0])
    rank = {idx: r for r, idx in enumerate(order)}
    diff = [0] * (n + 1)
    for i, j in sub.pairs:
        lo, hi = sorted((rank[i], rank[j]))
        diff[lo] += 1
        diff[hi + 1] -= 1
    counts_by_rank = []
    acc = 0
    for r in range(n):
        acc += diff[r]
        counts_by_rank.append(acc)
    counts = [0] * n
    for r, idx in enumerate(order):
        counts[idx] = counts_by_rank[r]
    best_rank = max(range(n), key=lambda r: (counts_by_rank[r], -r))
    m = sub.m
    unslacked = Fraction(m * m, 2 * n * n) + Fraction(3 * m, 2 * n)
    bound = unslacked - 1
    max_value = counts_by_rank[best_rank]
    return IntervalProfile(counts, order[best_rank], max_value, bound,
                           max_value >= bound, unslacked)


def interval_runs_by_left(ps: PointSet, sub: InducedSubset) -> dict:
    """The X_i partition: intervals grouped by left endpoint, ordered by
    right endpoint.  The j-th interval of X_i contains at least j+1 points
    (closed), which is the per-partition sanity invariant.
    """
    n = len(ps)
    order = sorted(range(n), key=lambda i: ps.points[i][0])
    rank = {idx: r for r, idx in enumerate(order)}
    runs: dict = {}
    for i, j in sub.pairs:
        lo, hi = sorted((rank[i], rank[j]))
        runs.setdefault(lo, []).append(hi)
    for lo in runs:
        runs[lo].sort()
    return runs


def gen_interval_upper(n: int, m: int):
    """Prefix-interval construction: runs [x_i, x_{i+1}], ..., [x_i, x_{i+k}]
    with k = min(ceil(sqrt(2) m / n), n - i), truncated to exactly m
    intervals in short-to-long, left-to-right order.
    """
    if n < 2 or m < 0:
        raise InvalidRange("need n >= 2, m >= 0")
    # validity range m <= n^2 (sqrt(2) - 1) - n / sqrt(2), exactly:
    # m + n^2 <= sqrt(2) (n^2 - n/2)  <=>  2 (m + n^2)^2 <= (2n^2 - n)^2
    if 2 * (m + n * n) ** 2 > (2 * n * n - n) ** 2:
        raise InvalidRange(f"m={m} outside the construction's validity range for n={n}")
    ps = PointSet(1, [(i,) for i in range(n)])
    if m == 0:
        return ps, InducedSubset(ps, [], ObjectFamily.INTERVAL)
    k = 1
    while k * k * n * n < 2 * m * m:
        k += 1
    pairs = []
    for length in range(1, k + 1):
        for i in range(0, n - length):
            pairs.append((i, i + length))
            if len(pairs) == m:
                return ps, InducedSubset(ps, pairs, ObjectFamily.INTERVAL)
    raise InvalidRange(f"construction yields only {len(pairs)} < m={m} intervals")


# ---------------------------------------------------------------------------
# Rectangles over the grid G
# ---------------------------------------------------------------------------

@dataclass
class GridIndex:
    xs: list               # sorted x-coordinates of P
    ys: list               # sorted y-coordinates
    x_rank: dict
    y_rank: dict

    @staticmethod
    def build(ps: PointSet) -> "GridIndex":
        if ps.dim != 2:
            raise GeoSelectError("grid index needs d = 2")
        xs = sorted(p[0] for p in ps.points)
        ys = sorted(p[1] for p in ps.points)
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise GeoSelectError("grid index needs distinct coordinates per axis")
        return GridIndex(xs, ys, {v: i for i, v in enumerate(xs)},
                         {v: i for i, v in enumerate(ys)})


def _rect_rank_span(grid: GridIndex, ps: PointSet, pair):
    i, j = pair
    a, b = ps.points[i], ps.points[j]
    x1, x2 = sorted((grid.x_rank[a[0]], grid.x_rank[b[0]]))
    y1, y2 = sorted((grid.y_rank[a[1]], grid.y_rank[b[1]]))
    return x1, x2, y1, y2


def rect_grid_points(grid: GridIndex, ps: PointSet, pair) -> int:
    """J_r: grid points inside the closed rectangle (a full rank box)."""
    x1, x2, y1, y2 = _rect_rank_span(grid, ps, pair)
    return (x2 - x1 + 1) * (y2 - y1 + 1)


@dataclass
class GridProfile:
    grid: GridIndex
    counts: np.ndarray     # I_g per (x-rank, y-rank) grid point
    max_point: tuple       # coordinates of the best grid point
    max_value: int
    bound: Fraction        # m^3 / (24 n^4)
    holds: bool
    total: int             # sum of I_g == sum of J_r


def grid_depth_map(ps: PointSet, sub: InducedSubset) -> GridProfile:
    """Closed containment counts I_g over all n^2 grid points, via a 2-d
    difference array in rank space: O(m + n^2)."""
    if sub.family is not ObjectFamily.RECTANGLE:
        raise GeoSelectError("grid depth map is for rectangle subsets")
    grid = GridIndex.build(ps)
    n = len(ps)
    diff = np.zeros((n + 1, n + 1), dtype=np.int64)
    for pair in sub.pairs:
        x1, x2, y1, y2 = _rect_rank_span(grid, ps, pair)
        diff[x1, y1] += 1
        diff[x1, y2 + 1] -= 1
        diff[x2 + 1, y1] -= 1
        diff[x2 + 1, y2 + 1] += 1
    counts = diff.cumsum(0).cumsum(1)[:n, :n]
    flat = int(np.argmax(counts))
    gx, gy = divmod(flat, n)
    m = sub.m
    bound = Fraction(m ** 3, 24 * n ** 4)
    max_value = int(counts[gx, gy])
    return GridProfile(grid, counts, (grid.xs[gx], grid.ys[gy]), max_value,
                       bound, max_value >= bound, int(counts.sum()))


def dump_profile_csv(profile: GridProfile, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("gx, gy, depth\n")
        n = len(profile.grid.xs)
        for gx in range(n):
            for gy in range(n):
                fh.write(f"{profile.grid.xs[gx]}, {profile.grid.ys[gy]}, "
                         f"{int(profile.counts[gx, gy])}\n")


# ---------------------------------------------------------------------------
# The X_i partition and the cubic lemma
# ---------------------------------------------------------------------------

@dataclass
class PartitionX:
    prime: dict            # base index -> partner indices right of it, desc y
    second: dict           # base index -> partner indices left of it, desc y
    m: int

    def m_prime(self, i: int) -> int:
        return len(self.prime.get(i, ()))

    def m_second(self, i: int) -> int:
        return len(self.second.get(i, ()))


def partition_rectangles(sub: InducedSubset) -> PartitionX:
    """Assign each rectangle to the partition of its LOWER endpoint, split by
    whether the higher partner lies right (X_i') or left (X_i'') of it,
    ordered by decreasing partner y-coordinate."""
    if sub.family is not ObjectFamily.RECTANGLE:
        raise GeoSelectError("partition is defined for rectangle subsets")
    ps = sub.base
    prime: dict = {}
    second: dict = {}
    for i, j in sub.pairs:
        a, b = ps.points[i], ps.points[j]
        if a[1] == b[1]:
            raise GeoSelectError("partition needs distinct y-coordinates")
        lo, hi = (i, j) if a[1] < b[1] else (j, i)
        target = prime if ps.points[hi][0] > ps.points[lo][0] else second
        target.setdefault(lo, []).append(hi)
    for d in (prime, second):
        for lo in d:
            d[lo].sort(key=lambda idx: -ps.points[idx][1])
    return PartitionX(prime, second, sub.m)


@dataclass
class CubicReport:
    base_index: int
    side: str              # "prime" | "second"
    m_i: int
    grid_point_sum: int
    bound: Fraction        # (m_i)^3 / 6
    holds: bool


def check_cubic_lemma(ps: PointSet, sub: InducedSubset) -> list:
    """Per-partition check: sum of J_r over X_i' is at least (m_i')^3 / 6."""
    part = partition_rectangles(sub)
    grid = GridIndex.build(ps)
    reports = []
    for side_name, groups in (("prime", part.prime), ("second", part.second)):
        for lo, partners in sorted(groups.items()):
            s = sum(rect_grid_points(grid, ps, (lo, hi)) for hi in partners)
            mi = len(partners)
            bound = Fraction(mi ** 3, 6)
            reports.append(CubicReport(lo, side_name, mi, s, bound, s >= bound))
    return reports


# ---------------------------------------------------------------------------
# Delaunay graphs and planarity
# ---------------------------------------------------------------------------

_DELAUNAY_FAMILIES = (ObjectFamily.SKYLINE, ObjectFamily.DOWN_TRIANGLE,
                      ObjectFamily.DISK)


def delaunay_graph(ps: PointSet, family: ObjectFamily) -> list:
    """Edges (i, j) whose induced object strictly contains no other point."""
    if family not in _DELAUNAY_FAMILIES:
        raise GeoSelectError(f"no Delaunay graph for family {family.value}")
    if ps.dim != 2:
        raise GeoSelectError("Delaunay graphs are planar-family, d = 2")
    if family is ObjectFamily.DOWN_TRIANGLE:
        # sheared-frame general position: the third triangle functional
        # (the coordinate sum) must be injective or planarity can fail
        sums = {p[0] + p[1] for p in ps.points}
        if len(sums) != len(ps.points):
            raise GeoSelectError("down-triangle Delaunay needs distinct "
                                 "coordinate sums (sheared-frame general position)")
    pred = _PREDICATES[family]
    pts = ps.points
    n = len(pts)
    edges = []
    for i in range(n):
        a = pts[i]
        for j in range(i + 1, n):
            b = pts[j]
            empty = True
            for k in range(n):
                if k == i or k == j:
                    continue
                if pred(a, b, pts[k]):
                    empty = False
                    break
            if empty:
                edges.append((i, j))
    return edges


def planarity_check(edges, n: int) -> bool:
    """Euler bound |E| <= 3n - 6 plus a full combinatorial planarity test."""
    if n >= 3 and len(edges) > 3 * n - 6:
        return False
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    planar, _ = nx.check_planarity(g)
    return bool(planar)
