#!/usr/bin/env python3
"""Fit three-arc parameters against the exact obtuse-pattern verifier.

The configuration needs a needle triangle (two base angles just below 90
degrees) so that the two-near-one-far triples outside the allowed pattern
stay acute: the pair-chords near a vertex are pinned perpendicular to the
direction of the far cluster, and the margins scale like the squared chord
gap over the arc radius, so integer realizability forces a large radius.

For each n this scans a small grid of (radius, needle angle, width ratios),
generates, runs the exact verifier, and prints the passing configurations so
the best one can be frozen into constructions._THREE_ARC_DEFAULTS.

Usage: python3 tools/tune_three_arc.py [n ...]
"""

import itertools
import math
import sys

sys.path.insert(0, "src")

from geoselect.constructions import _three_arc, three_arc_classes, verify_obtuse_pattern  # noqa: E402


def try_config(n, delta_deg, radius, wa, wb, wc):
    params = {
        "alpha_deg": 90.0 - delta_deg,
        "beta_deg": 90.0 - delta_deg,
        "gamma_deg": 2.0 * delta_deg,
        "radius": radius,
        "widths": (wa, wb, wc),
    }
    try:
        ps = _three_arc(n, params)
    except Exception as exc:  # noqa: BLE001
        return None, f"generation failed: {exc}"
    ok, viol = verify_obtuse_pattern(ps, three_arc_classes(n))
    if ok:
        return params, None
    from collections import Counter

    summary = Counter((v.shape, v.reason) for v in viol)
    return None, dict(summary)


def derive_widths(n, delta_deg, radius, ku=2.0, kb=3.0, ka=3.0):
    """Width triple from the constraint chain, with safety factors."""
    m = n // 3
    delta = math.radians(delta_deg)
    gamma = 2 * delta
    c = 2 * radius * math.sin(gamma)      # short side AB (arc A's circle)
    a = 2 * radius * math.sin(math.pi / 2 - delta)  # |BC| (arc B's circle)
    b = a                                 # |CA| (arc C's circle)
    u_c = max(3.0, ku * math.sqrt(6 * b))
    w_c = (m - 1) * u_c
    u_b = kb * 2 * w_c                    # BBC: W_C * cos(gamma) < u_B / 2
    w_b = (m - 1) * u_b
    u_a = max(ka * 2 * w_b * math.sin(delta), ku * math.sqrt(6 * c), 3.0)
    w_a = (m - 1) * u_a
    return round(w_a), round(w_b), round(w_c)


def scan(n, radii=(31, 33, 35, 37, 39, 41, 43, 45, 47),
         deltas=(0.1, 0.2, 0.35, 0.6, 1.0, 1.8, 3.0),
         ku=2.0, kb=3.0, ka=3.0, window=5):
    print(f"=== n = {n} (ku={ku} kb={kb} ka={ka} window={window}) ===")
    m = n // 3
    # CCA needs sin^2(delta) < 1 / (8 ka kb (m-1)^3)
    delta_cap = math.degrees(math.asin(math.sqrt(1.0 / (8 * ka * kb * (m - 1) ** 3))))
    print(f"  delta cap from the CCA chain: {delta_cap:.3f} deg")
    found = []
    for log2r in radii:
        radius = 2 ** log2r
        for delta_deg in deltas:
            if delta_deg > delta_cap:
                continue
            wa, wb, wc = derive_widths(n, delta_deg, radius, ku, kb, ka)
            params, err = try_config(n, delta_deg, radius, wa, wb, wc)
            if params:
                params["window"] = window
            tag = "PASS" if params else err
            print(f"  R=2^{log2r} delta={delta_deg:5.3f} "
                  f"W=({wa},{wb},{wc}) -> {tag}")
            if params:
                found.append((log2r, delta_deg, params))
        if found:
            break
    return found


def freeze_table(ns):
    table = {}
    for n in ns:
        if n == 3:
            table[n] = (80.0, 60.0, 40.0, None, 10 ** 6)
            continue
        m = n // 3
        cap = math.degrees(math.asin(math.sqrt(1.0 / (8 * 2.56 * (m - 1) ** 3))))
        deltas = tuple(sorted({round(cap * f, 3) for f in (0.35, 0.55, 0.8)}))
        hits = scan(n, radii=tuple(range(33, 56, 2)), deltas=deltas,
                    ku=1.0, kb=1.6, ka=1.6, window=9)
        if not hits:
            print(f"  !! n={n}: NO PASS in grid")
            continue
        log2r, delta, params = hits[0]
        table[n] = (params["alpha_deg"], params["beta_deg"], params["gamma_deg"],
                    params["widths"], 2 ** log2r)
    print("\n_THREE_ARC_DEFAULTS = {")
    for n, row in sorted(table.items()):
        print(f"    {n}: {row!r},")
    print("}")


if __name__ == "__main__":
    ns = [int(x) for x in sys.argv[1:]] or list(range(3, 49, 3))
    freeze_table(ns)
