"""Acceptance-criterion runners, shared by the CLI selftest and the tests.

Each criterion function is deterministic in its seed, scales with its
instance-count arguments (the test suite runs them at full scale, the CLI
selftest at a reduced scale), and returns a CriterionResult whose failures
list carries enough data (seed, n, observed, required) to replay.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import firstsel
from .constructions import (ConstructionKind, ConstructionSpec, generate,
                            random_point_set, three_arc_classes,
                            verify_obtuse_pattern)
from .depth import depth_brute, depth_fast
from .families import ObjectFamily
from .firstsel import (box_point_recursive, hypersphere_weak_point,
                       quadrant_strong_point, skyline_strong_point,
                       strong_max, strong_rect_centerpoint, symmetric_peel,
                       weak_max)
from .points import PointSet
from .secondsel import (InducedSubset, check_cubic_lemma, delaunay_graph,
                        gen_interval_upper, grid_depth_map,
                        interval_depth_profile, planarity_check,
                        rect_grid_points, sample_subset)

F = ObjectFamily


@dataclass
class CriterionResult:
    name: str
    passed: bool
    checks: int
    failures: list = field(default_factory=list)
    notes: str = ""

    def record(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures[:20],
            "notes": self.notes,
        }

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}: {self.checks} checks, {len(self.failures)} failures. {self.notes}"


# ---------------------------------------------------------------------------
# 1. Oracle equivalence
# ---------------------------------------------------------------------------

_ORACLE_FAMILIES = (F.RECTANGLE, F.QUADRANT, F.SLAB_BOTH, F.SKYLINE, F.DISK)


def criterion_oracle_equivalence(instances: int = 500, candidates: int = 20,
                                 seed: int = 101) -> CriterionResult:
    failures = []
    checks = 0
    for t in range(instances):
        rng = random.Random(seed + t)
        n = rng.randint(5, 48)
        ps = random_point_set(n, 2, seed=seed + t)
        xs = sorted(p[0] for p in ps.points)
        ys = sorted(p[1] for p in ps.points)
        cands = []
        for _ in range(candidates - candidates // 3):
            i = rng.randrange(n - 1)
            j = rng.randrange(n - 1)
            cands.append((Fraction(xs[i] + xs[i + 1], 2), Fraction(ys[j] + ys[j + 1], 2)))
        for _ in range(candidates // 3):
            cands.append(ps.points[rng.randrange(n)])
        for p in cands:
            for fam in _ORACLE_FAMILIES:
                checks += 1
                db = depth_brute(ps, fam, p).depth
                df = depth_fast(ps, fam, p).depth
                if db != df:
                    failures.append({"seed": seed + t, "n": n, "family": fam.value,
                                     "point": [str(c) for c in p],
                                     "brute": db, "fast": df})
    return CriterionResult("oracle equivalence (fast == brute)",
                           not failures, checks, failures,
                           f"{instances} instances x {candidates} candidates x 5 families")


# ---------------------------------------------------------------------------
# 2. First-selection lower bounds, universally on random instances
# ---------------------------------------------------------------------------

def _lower_suites(tukey_cap):
    """(name, dim, symmetric, finder(ps) -> depth, required(n))"""
    def rect_cp_depth(ps, fam):
        p = strong_rect_centerpoint(ps)
        return firstsel.depth_at(ps, fam, p)

    return [
        ("rect strong >= n^2/16 - 2n", 2, False,
         lambda ps: rect_cp_depth(ps, F.RECTANGLE),
         lambda n: Fraction(n * n, 16) - 2 * n),
        ("rect weak >= n^2/8 - 2n", 2, False,
         lambda ps: weak_max(ps, F.RECTANGLE).depth,
         lambda n: Fraction(n * n, 8) - 2 * n),
        ("quadrant strong >= n^2/4 - 2n", 2, False,
         lambda ps: firstsel.depth_at(ps, F.QUADRANT, quadrant_strong_point(ps)),
         lambda n: Fraction(n * n, 4) - 2 * n),
        ("quadrant weak == C(n,2)", 2, False,
         lambda ps: weak_max(ps, F.QUADRANT).depth,
         lambda n: comb(n, 2)),
        ("slab strong >= 3n^2/8 - 3n", 2, False,
         lambda ps: rect_cp_depth(ps, F.SLAB_BOTH),
         lambda n: Fraction(3 * n * n, 8) - 3 * n),
        ("skyline strong >= n^2/9 - 2n", 2, False,
         lambda ps: firstsel.depth_at(ps, F.SKYLINE, skyline_strong_point(ps)),
         lambda n: Fraction(n * n, 9) - 2 * n),
        ("skyline weak >= n^2/4 - n", 2, False,
         lambda ps: weak_max(ps, F.SKYLINE).depth,
         lambda n: Fraction(n * n, 4) - n),
        ("disk strong >= n^2/16 - 2n", 2, False,
         lambda ps: rect_cp_depth(ps, F.DISK),
         lambda n: Fraction(n * n, 16) - 2 * n),
        ("hypersphere weak d=2 >= n^2/6 - n", 2, False,
         lambda ps: hypersphere_weak_point(ps, cap=tukey_cap).depth,
         lambda n: Fraction(n * n, 6) - n),
        ("hypersphere weak d=3 >= n^2/8 - n", 3, False,
         lambda ps: hypersphere_weak_point(ps, cap=tukey_cap).depth,
         lambda n: Fraction(n * n, 8) - n),
        ("box weak d=3 >= n^2/128 - 2n", 3, False,
         lambda ps: box_point_recursive(ps).depth,
         lambda n: Fraction(n * n, 128) - 2 * n),
        ("symmetric disk strong >= (n/2-1)^2/2 exactly", 2, True,
         lambda ps: firstsel.depth_at(ps, F.DISK, symmetric_peel(ps)),
         lambda n: Fraction((n // 2 - 1) ** 2, 2)),
        ("symmetric disk weak at origin >= n^2/4 - n", 2, True,
         lambda ps: hypersphere_weak_point(ps, cap=tukey_cap).depth,
         lambda n: Fraction(n * n, 4) - n),
    ]


def criterion_lower_bounds(trials: int = 200, seed: int = 202,
                           n_lo: int = 8, n_hi: int = 48) -> CriterionResult:
    failures = []
    checks = 0
    suites = _lower_suites(tukey_cap=n_hi)
    for si, (name, dim, symmetric, finder, required) in enumerate(suites):
        for t in range(trials):
            rng = random.Random(seed + 100_000 * si + t)
            n = rng.randint(n_lo, n_hi)
            if symmetric and n % 2 == 1:
                n += 1
            ps = random_point_set(n, dim, seed=seed + t, symmetric=symmetric)
            checks += 1
            depth = finder(ps)
            need = required(len(ps))
            if depth < need:
                failures.append({"suite": name, "seed": seed + t, "n": len(ps),
                                 "observed": depth, "required": str(need)})
    return CriterionResult("first-selection lower bounds", not failures,
                           checks, failures, f"{trials} instances per suite, "
                           f"{len(suites)} suites")


# ---------------------------------------------------------------------------
# 3. Upper-bound witnesses on the constructed sets
# ---------------------------------------------------------------------------

def criterion_upper_witnesses(ns=(24, 48), grid_n: int = 64) -> CriterionResult:
    failures = []
    checks = 0

    def check(label, observed, ok):
        nonlocal checks
        checks += 1
        if not ok:
            failures.append({"witness": label, "observed": observed})

    for n in ns:
        circle = generate(ConstructionSpec(ConstructionKind.CIRCLE, n))
        rs = strong_max(circle, F.RECTANGLE).depth
        check(f"circle {n} rect strong within n of n^2/16", rs,
              abs(rs - Fraction(n * n, 16)) <= n)
        rw = weak_max(circle, F.RECTANGLE).depth
        check(f"circle {n} rect weak <= n^2/8 + n", rw, rw <= Fraction(n * n, 8) + n)
        ss = strong_max(circle, F.SLAB_BOTH).depth
        check(f"circle {n} slab strong <= 3n^2/8 + n", ss, ss <= Fraction(3 * n * n, 8) + n)
        ds = strong_max(circle, F.DISK).depth
        check(f"circle {n} disk strong <= n^2/8 + n", ds, ds <= Fraction(n * n, 8) + n)

        semi = generate(ConstructionSpec(ConstructionKind.SEMICIRCLE, n))
        ks = strong_max(semi, F.SKYLINE).depth
        check(f"semicircle {n} skyline strong <= n^2/8 + n", ks,
              ks <= Fraction(n * n, 8) + n)

        chain = generate(ConstructionSpec(ConstructionKind.DECREASING_CHAIN, n))
        qs = strong_max(chain, F.QUADRANT).depth
        frozen = (n // 2) * ((n + 1) // 2) - (n // 2)
        check(f"chain {n} quadrant strong == frozen x(n-x) value", qs, qs == frozen)

        for d in (2, 3):
            line = generate(ConstructionSpec(ConstructionKind.INCREASING_LINE, n, d=d))
            hw = weak_max(line, F.HYPERSPHERE, tukey_cap=max(ns)).depth
            check(f"line {n} d={d} hypersphere weak candidates <= n^2/4 + n", hw,
                  hw <= Fraction(n * n, 4) + n)

        arc = generate(ConstructionSpec(ConstructionKind.THREE_ARC, n))
        ok, viol = verify_obtuse_pattern(arc, three_arc_classes(n))
        check(f"three-arc {n} obtuse pattern", len(viol), ok)
        da = strong_max(arc, F.DISK).depth
        check(f"three-arc {n} disk strong <= n^2/9 + n", da,
              da <= Fraction(n * n, 9) + n)

    for d in (2, 3):
        grid = generate(ConstructionSpec(ConstructionKind.UNIFORM_GRID, grid_n, d=d))
        fam = F.RECTANGLE if d == 2 else F.BOX
        bw = weak_max(grid, fam).depth
        check(f"grid n={grid_n} d={d} box weak <= n^2/2^(d+1) + n", bw,
              bw <= Fraction(grid_n * grid_n, 2 ** (d + 1)) + grid_n)

    return CriterionResult("upper-bound witnesses", not failures, checks, failures,
                           f"constructions at n in {tuple(ns)}, grids n={grid_n}")


# ---------------------------------------------------------------------------
# 4. Second selection, intervals
# ---------------------------------------------------------------------------

def criterion_intervals(samples: int = 300, seed: int = 404,
                        upper_ns=(16, 32, 64), upper_ks=(2, 4)) -> CriterionResult:
    failures = []
    checks = 0
    for t in range(samples):
        rng = random.Random(seed + t)
        n = rng.randint(2, 64)
        m = rng.randint(1, comb(n, 2))
        ps = PointSet(1, [(v,) for v in
                          rng.sample(range(-8 * n * n, 8 * n * n), n)])
        sub = sample_subset(ps, F.INTERVAL, m, seed=seed + t)
        prof = interval_depth_profile(ps, sub)
        checks += 1
        if not prof.holds:
            failures.append({"phase": "lemma", "seed": seed + t, "n": n, "m": m,
                             "max": prof.max_value, "bound": str(prof.bound)})
    for n in upper_ns:
        for k in upper_ks:
            m = n * k
            ps, sub = gen_interval_upper(n, m)
            prof = interval_depth_profile(ps, sub)
            x = Fraction(m * m, n * n) + Fraction(3 * m, n)
            checks += 1
            if not (x / 4 <= prof.max_value <= 4 * x):
                failures.append({"phase": "upper-construction", "n": n, "m": m,
                                 "max": prof.max_value, "target": str(x)})
    return CriterionResult("second selection: intervals", not failures, checks,
                           failures, f"{samples} sampled instances + upper construction")


# ---------------------------------------------------------------------------
# 5. Second selection, rectangles
# ---------------------------------------------------------------------------

def _icbrt_ceil(x: int) -> int:
    r = round(x ** (1 / 3))
    while r ** 3 < x:
        r += 1
    while (r - 1) ** 3 >= x:
        r -= 1
    return r


def criterion_rect_second(instances: int = 100, seed: int = 505,
                          ns=(12, 16, 24)) -> CriterionResult:
    failures = []
    checks = 0
    for t in range(instances):
        rng = random.Random(seed + t)
        n = ns[t % len(ns)]
        total = comb(n, 2)
        m_min = min(_icbrt_ceil(27 * n ** 4), total)
        m = rng.randint(m_min, total)
        ps = random_point_set(n, 2, seed=seed + t)
        sub = sample_subset(ps, F.RECTANGLE, m, seed=seed + 7 * t + 1)
        prof = grid_depth_map(ps, sub)
        checks += 1
        if not prof.holds:
            failures.append({"phase": "m^3/24n^4", "seed": seed + t, "n": n, "m": m,
                             "max": prof.max_value, "bound": str(prof.bound)})
        j_sum = sum(rect_grid_points(prof.grid, ps, pr) for pr in sub.pairs)
        checks += 1
        if prof.total != j_sum:
            failures.append({"phase": "double-counting", "seed": seed + t,
                             "I": prof.total, "J": j_sum})
        reports = check_cubic_lemma(ps, sub)
        checks += 1
        bad = [r for r in reports if not r.holds]
        if bad:
            failures.append({"phase": "cubic-lemma", "seed": seed + t,
                             "bad": [(r.base_index, r.side) for r in bad]})
    return CriterionResult("second selection: rectangles", not failures, checks,
                           failures, f"{instances} instances, n in {tuple(ns)}, "
                           "m >= min(3n^(4/3), C(n,2))")


# ---------------------------------------------------------------------------
# 6. Strong centerpoint soundness by exhaustive region enumeration
# ---------------------------------------------------------------------------

def _rank_prefix(ps: PointSet):
    n = len(ps)
    xs = sorted(p[0] for p in ps.points)
    ys = sorted(p[1] for p in ps.points)
    xr = {v: i for i, v in enumerate(xs)}
    yr = {v: i for i, v in enumerate(ys)}
    occ = np.zeros((n, n), dtype=np.int64)
    for p in ps.points:
        occ[xr[p[0]], yr[p[1]]] = 1
    pref = np.zeros((n + 1, n + 1), dtype=np.int64)
    pref[1:, 1:] = occ.cumsum(0).cumsum(1)
    return pref, xr, yr


def _rect_soundness(ps: PointSet) -> bool:
    """Every closed rectangle with more than 3n/4 points contains the
    strong rect-centerpoint (unbounded sides reduce to extreme ranks since
    the piercing point is a member of P)."""
    n = len(ps)
    p = strong_rect_centerpoint(ps)
    pref, xr, yr = _rank_prefix(ps)
    px, py = xr[p[0]], yr[p[1]]
    idx = np.arange(n + 1)
    cnt = (pref[None, :, None, :] - pref[:, None, None, :]
           - pref[None, :, :, None] + pref[:, None, :, None])
    # cnt[xlo, xhi+1, ylo, yhi+1]: points with rank in [xlo, xhi] x [ylo, yhi]
    heavy = 4 * cnt > 3 * n
    valid = ((idx[:, None, None, None] < idx[None, :, None, None])
             & (idx[None, None, :, None] < idx[None, None, None, :]))
    lo_x = idx[:, None, None, None] <= px
    hi_x = idx[None, :, None, None] >= px + 1
    lo_y = idx[None, None, :, None] <= py
    hi_y = idx[None, None, None, :] >= py + 1
    contains = lo_x & hi_x & lo_y & hi_y
    return not bool((heavy & valid & ~contains).any())


def _quadrant_soundness(ps: PointSet) -> bool:
    n = len(ps)
    p = quadrant_strong_point(ps)
    pref, xr, yr = _rank_prefix(ps)
    px, py = xr[p[0]], yr[p[1]]
    # apex below-left rank (a, b): quadrant holds points with x-rank >= a,
    # y-rank >= b (a, b in 0..n; strict-greater apexes off the grid).
    idx = np.arange(n + 1)
    tail = (pref[n, n] - pref[:, n][:, None] - pref[n, :][None, :]
            + pref)
    heavy = 2 * tail > n
    contains = (idx[:, None] <= px) & (idx[None, :] <= py)
    return not bool((heavy & ~contains).any())


def _skyline_soundness(ps: PointSet) -> bool:
    n = len(ps)
    p = skyline_strong_point(ps)
    pref, xr, yr = _rank_prefix(ps)
    px, py = xr[p[0]], yr[p[1]]
    idx = np.arange(n + 1)
    # region [xlo..xhi] x (-inf, ytop]: count = colcount(xlo..xhi, 0..ytop)
    cnt = (pref[None, :, :] - pref[:, None, :])
    heavy = 3 * cnt > 2 * n   # cnt[xlo, xhi+1, ytop+1]
    valid = idx[:, None, None] < idx[None, :, None]
    contains = ((idx[:, None, None] <= px) & (idx[None, :, None] >= px + 1)
                & (idx[None, None, :] >= py + 1))
    return not bool((heavy & valid & ~contains).any())


def criterion_centerpoint_soundness(instances: int = 100, seed: int = 606,
                                    n_hi: int = 20) -> CriterionResult:
    failures = []
    checks = 0
    for t in range(instances):
        rng = random.Random(seed + t)
        n = rng.randint(4, n_hi)
        ps = random_point_set(n, 2, seed=seed + t)
        for name, fn in (("rect", _rect_soundness),
                         ("quadrant", _quadrant_soundness),
                         ("skyline", _skyline_soundness)):
            if name == "skyline" and n < 3:
                continue
            checks += 1
            if not fn(ps):
                failures.append({"region": name, "seed": seed + t, "n": n})
    return CriterionResult("strong centerpoint soundness (exhaustive)",
                           not failures, checks, failures,
                           f"{instances} instances, n <= {n_hi}")


# ---------------------------------------------------------------------------
# 7. Delaunay planarity
# ---------------------------------------------------------------------------

def criterion_delaunay_planarity(sets: int = 200, seed: int = 707,
                                 n_hi: int = 60) -> CriterionResult:
    failures = []
    checks = 0
    fams = (F.SKYLINE, F.DOWN_TRIANGLE, F.DISK)
    for t in range(sets):
        rng = random.Random(seed + t)
        n = rng.randint(4, n_hi)
        ps = random_point_set(n, 2, seed=seed + t, distinct_diagonals=True)
        for fam in fams:
            checks += 1
            edges = delaunay_graph(ps, fam)
            if n >= 3 and len(edges) > 3 * n - 6:
                failures.append({"family": fam.value, "seed": seed + t, "n": n,
                                 "edges": len(edges), "why": "euler"})
                continue
            if not planarity_check(edges, n):
                failures.append({"family": fam.value, "seed": seed + t, "n": n,
                                 "why": "embedding"})
    return CriterionResult("Delaunay planarity (skyline, down-triangle, disk)",
                           not failures, checks, failures,
                           f"{sets} random sets, n <= {n_hi}")


# ---------------------------------------------------------------------------

def run_all(scale: float = 1.0, seed: int = 42) -> list:
    """Reduced- or full-scale sweep of criteria 1-7 (determinism, criterion
    8, is checked by invoking the CLI selftest twice and comparing bytes)."""
    def k(base):
        return max(2, round(base * scale))

    return [
        criterion_oracle_equivalence(instances=k(500), candidates=20, seed=seed + 1),
        criterion_lower_bounds(trials=k(200), seed=seed + 2),
        criterion_upper_witnesses(ns=(24, 48)),
        criterion_intervals(samples=k(300), seed=seed + 4),
        criterion_rect_second(instances=k(100), seed=seed + 5),
        criterion_centerpoint_soundness(instances=k(100), seed=seed + 6),
        criterion_delaunay_planarity(sets=k(200), seed=seed + 7),
    ]
