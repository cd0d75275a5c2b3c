"""Command-line surface: generators, depth queries, piercing searches,
bound-verification suites, second-selection checks, and the selftest.

Reports are JSON (schema 1) with exact rational bound strings plus float
convenience fields; identical configs produce byte-identical reports (all
randomness flows from the mandatory --seed, keys are sorted, no wall-clock
data is emitted).  Exit status: 0 when every asserted property holds, 1 on a
property failure (the failing instance is serialized for replay), 2 on
invalid configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import suite as suite_mod
from .constructions import (ConstructionKind, ConstructionSpec, generate,
                            random_point_set, three_arc_classes,
                            verify_obtuse_pattern)
from .depth import depth_brute, depth_fast
from .errors import GeoSelectError
from .families import ObjectFamily
from .firstsel import (Variant, _finder_for, table1_spec,
                       verify_first_selection)
from .points import PointSet, dump_points, load_points
from .secondsel import (check_cubic_lemma, delaunay_graph, dump_profile_csv,
                        grid_depth_map, interval_depth_profile, load_subset,
                        planarity_check, rect_grid_points, sample_subset)

SCHEMA = 1


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace


def _emit(report: dict, out: str | None, fmt: str = "json") -> None:
    report = {"schema": SCHEMA, **report}
    if fmt == "text":
        text = "\n".join(f"{k}: {v}" for k, v in sorted(report.items())) + "\n"
    else:
        text = json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rational(x: Fraction) -> dict:
    f = Fraction(x)
    return {"exact": f"{f.numerator}/{f.denominator}", "float": float(f)}


def _parse_point(text: str, dim: int):
    parts = text.replace(",", " ").split()
    if len(parts) != dim:
        raise GeoSelectError(f"point needs {dim} coordinates, got {len(parts)}")
    coords = []
    for tok in parts:
        coords.append(Fraction(tok) if "/" in tok or "." in tok else int(tok))
    return tuple(coords)


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    kind = ConstructionKind.from_name(args.kind)
    if kind in (ConstructionKind.RANDOM_GENERAL, ConstructionKind.RANDOM_SYMMETRIC) \
            and args.seed is None:
        raise GeoSelectError("--seed is mandatory for random constructions")
    spec = ConstructionSpec(kind, args.n, d=args.d, scale=args.scale,
                            seed=args.seed or 0)
    ps = generate(spec)
    comments = [f"geoselect gen {args.kind} n={args.n} d={args.d} "
                f"scale={args.scale} seed={args.seed or 0}"]
    if args.frame:
        comments.append(f"frame={args.frame}")
    dump_points(ps, args.out, comments=comments)
    return 0


def _cmd_depth(args) -> int:
    ps = load_points(getattr(args, "in"))
    fam = ObjectFamily.from_name(args.family)
    p = _parse_point(args.point, ps.dim)
    brute = depth_brute(ps, fam, p).depth
    fast = None
    fast_err = None
    try:
        fast = depth_fast(ps, fam, p).depth
    except GeoSelectError as exc:
        fast_err = str(exc)
    report = {
        "command": "depth", "family": fam.value, "n": len(ps), "d": ps.dim,
        "point": [str(c) for c in p], "depth_brute": brute,
        "depth_fast": fast, "fast_error": fast_err,
        "engines_agree": (fast is None or fast == brute),
    }
    _emit(report, args.out, args.format)
    return 0 if (fast is None or fast == brute) else 1


def _cmd_pierce(args) -> int:
    ps = load_points(getattr(args, "in"))
    fam = ObjectFamily.from_name(args.family)
    variant = Variant(args.variant)
    try:
        spec = table1_spec(fam, variant, d=ps.dim, symmetric=args.symmetric)
    except GeoSelectError:
        spec = None
    if spec is not None and args.slack is not None:
        spec.slack = Fraction(args.slack)
    if spec is None:
        raise GeoSelectError(f"no Table-1 bound for {fam.value}/{variant.value}")
    n = len(ps)
    check = verify_first_selection(ps, spec, tukey_cap=max(len(ps), 60))
    report = {
        "command": "pierce", "family": fam.value, "variant": variant.value,
        "n": n, "d": ps.dim, "depth": check.observed,
        "point": [str(c) for c in check.point],
        "required": _rational(check.required),
        "bound": _rational(spec.coefficient * n * n),
        "holds": check.holds,
    }
    _emit(report, args.out, args.format)
    return 0 if check.holds else 1


def _cmd_verify(args) -> int:
    fam = ObjectFamily.from_name(args.family)
    variant = Variant(args.variant)
    d = args.d
    spec = table1_spec(fam, variant, d=d, symmetric=args.symmetric)
    if args.slack is not None:
        spec.slack = Fraction(args.slack)
    records = []
    failing = []
    for t in range(args.trials):
        seed = args.seed + t
        ps = random_point_set(args.n, d, seed=seed, symmetric=args.symmetric)
        check = verify_first_selection(ps, spec, seed=seed, tukey_cap=args.n)
        records.append(check.record())
        if not check.holds:
            failing.append({"seed": seed, "n": args.n, "d": d,
                            "points": [list(p) for p in ps.points]})
    report = {
        "command": "verify", "family": fam.value, "variant": variant.value,
        "n": args.n, "d": d, "trials": args.trials, "seed": args.seed,
        "all_hold": not failing, "records": records, "failing": failing,
    }
    _emit(report, args.out, args.format)
    return 0 if not failing else 1


def _cmd_second(args) -> int:
    if args.mode == "intervals":
        if getattr(args, "in") is not None:
            ps = load_points(getattr(args, "in"))
            sub = load_subset(ps, ObjectFamily.INTERVAL, args.pairs)
        else:
            import random as _r
            rng = _r.Random(args.seed)
            span = max(4 * args.n * args.n, 64)
            ps = PointSet(1, [(v,) for v in rng.sample(range(-span, span), args.n)])
            sub = sample_subset(ps, ObjectFamily.INTERVAL, args.m, seed=args.seed)
        prof = interval_depth_profile(ps, sub)
        report = {
            "command": "second", "mode": "intervals", "n": len(ps), "m": sub.m,
            "seed": args.seed, "max_depth": prof.max_value,
            "max_point": str(ps.points[prof.max_index][0]),
            "bound": _rational(prof.bound), "holds": prof.holds,
        }
        _emit(report, args.out, args.format)
        return 0 if prof.holds else 1
    # rectangles
    if getattr(args, "in") is not None:
        ps = load_points(getattr(args, "in"))
        sub = load_subset(ps, ObjectFamily.RECTANGLE, args.pairs)
    else:
        ps = random_point_set(args.n, 2, seed=args.seed)
        sub = sample_subset(ps, ObjectFamily.RECTANGLE, args.m, seed=args.seed)
    prof = grid_depth_map(ps, sub)
    j_sum = sum(rect_grid_points(prof.grid, ps, pr) for pr in sub.pairs)
    cubic = check_cubic_lemma(ps, sub)
    cubic_ok = all(r.holds for r in cubic)
    holds = prof.holds and prof.total == j_sum and cubic_ok
    if args.profile_csv:
        dump_profile_csv(prof, args.profile_csv)
    report = {
        "command": "second", "mode": "rects", "n": len(ps), "m": sub.m,
        "seed": args.seed, "max_depth": prof.max_value,
        "max_grid_point": [str(c) for c in prof.max_point],
        "bound": _rational(prof.bound),
        "double_count": {"sum_I": prof.total, "sum_J": j_sum,
                         "equal": prof.total == j_sum},
        "cubic_lemma_holds": cubic_ok,
        "holds": holds,
    }
    _emit(report, args.out, args.format)
    return 0 if holds else 1


def _cmd_delaunay(args) -> int:
    ps = load_points(getattr(args, "in"))
    fam = ObjectFamily.from_name(args.family)
    edges = delaunay_graph(ps, fam)
    planar = planarity_check(edges, len(ps))
    report = {
        "command": "delaunay", "family": fam.value, "n": len(ps),
        "edges": edges, "edge_count": len(edges),
        "euler_bound": 3 * len(ps) - 6, "planar": planar,
    }
    _emit(report, args.out, args.format)
    return 0 if planar else 1


def _cmd_selftest(args) -> int:
    results = suite_mod.run_all(scale=args.scale, seed=args.seed)
    for r in results:
        sys.stderr.write(r.line() + "\n")
    report = {
        "command": "selftest", "seed": args.seed, "scale": args.scale,
        "criteria": [r.record() for r in results],
        "all_passed": all(r.passed for r in results),
    }
    _emit(report, args.out, args.format)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="geoselect",
        description="Selection lemmas for induced geometric objects: "
                    "generators, depth engines, piercing searches, and "
                    "verification suites.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, family=False, variant=False):
        if family:
            p.add_argument("--family", required=True,
                           choices=[f.value for f in ObjectFamily])
        if variant:
            p.add_argument("--variant", required=True, choices=["strong", "weak"])
        p.add_argument("--out", default=None, help="report path (default stdout)")
        p.add_argument("--format", default="json", choices=["json", "text"])

    g = sub.add_parser("gen", help="emit an extremal or random point set")
    g.add_argument("kind", choices=[k.value for k in ConstructionKind])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--scale", type=int, default=10 ** 6)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--frame", default=None, choices=[None, "sheared"],
                   help="stamp a frame comment (sheared down-triangle sets)")
    g.add_argument("--out", required=True)

    d = sub.add_parser("depth", help="depth of a point, both engines")
    d.add_argument("--in", required=True)
    d.add_argument("--point", required=True, help="coordinates, e.g. '3/2 3/2'")
    add_common(d, family=True)

    p = sub.add_parser("pierce", help="run the piercing-point finder")
    p.add_argument("--in", required=True)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--slack", default=None)
    add_common(p, family=True, variant=True)

    v = sub.add_parser("verify", help="bound verification over random trials")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--d", type=int, default=2)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--slack", default=None)
    v.add_argument("--symmetric", action="store_true")
    add_common(v, family=True, variant=True)

    s = sub.add_parser("second", help="second selection engines and checks")
    s.add_argument("mode", choices=["intervals", "rects"])
    s.add_argument("--n", type=int, default=16)
    s.add_argument("--m", type=int, default=32)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--in", default=None, help="point-set file (with --pairs)")
    s.add_argument("--pairs", default=None, help="subset file")
    s.add_argument("--profile-csv", default=None,
                   help="dump the rectangle grid profile as CSV")
    add_common(s)

    dl = sub.add_parser("delaunay", help="Delaunay graph and planarity check")
    dl.add_argument("--in", required=True)
    add_common(dl, family=True)

    st = sub.add_parser("selftest", help="reduced-scale acceptance sweep")
    st.add_argument("--seed", type=int, required=True)
    st.add_argument("--scale", type=float, default=0.08,
                    help="instance-count multiplier vs the full suite")
    add_common(st)
    return ap


_HANDLERS = {
    "gen": _cmd_gen,
    "depth": _cmd_depth,
    "pierce": _cmd_pierce,
    "verify": _cmd_verify,
    "second": _cmd_second,
    "delaunay": _cmd_delaunay,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except GeoSelectError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
