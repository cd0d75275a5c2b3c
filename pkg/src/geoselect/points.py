"""Exact point sets: integer lattice points, validation, and file I/O.

A point is a plain tuple of ints (the lattice universe P) or of Fractions
(rational candidate points produced by the weak-variant searches; these are
never stored inside a PointSet).  All predicates downstream are polynomial in
the coordinates and evaluated in exact arithmetic, so equality and sign tests
are never approximate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import GeoSelectError

Point = tuple  # tuple[int, ...]
RationalPoint = tuple  # tuple[Fraction, ...]
AnyPoint = Union[Point, RationalPoint]

#: Default magnitude bound: degree-2 predicates fit 64-bit arithmetic with
#: headroom.  Python ints are exact at any size, so a larger bound may be
#: declared explicitly where a construction needs more room.
DEFAULT_COORD_BOUND = 2 ** 30


@dataclass
class PointSet:
    """An ordered set of n distinct integer points in dimension d."""

    dim: int
    points: tuple
    general_position_checked: bool = False
    coord_bound: int = DEFAULT_COORD_BOUND

    def __init__(self, dim: int, points: Iterable[Sequence[int]],
                 coord_bound: int = DEFAULT_COORD_BOUND):
        if dim < 1:
            raise GeoSelectError(f"dimension must be >= 1, got {dim}")
        pts = tuple(tuple(int(c) for c in p) for p in points)
        for p in pts:
            if len(p) != dim:
                raise GeoSelectError(f"point {p} has wrong dimension (want {dim})")
            for c in p:
                if abs(c) > coord_bound:
                    raise GeoSelectError(
                        f"coordinate {c} exceeds declared magnitude bound {coord_bound}")
        if len(set(pts)) != len(pts):
            raise GeoSelectError("points must be distinct")
        self.dim = dim
        self.points = pts
        self.general_position_checked = False
        self.coord_bound = coord_bound

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)


@dataclass
class Violation:
    """One general-position defect; violations are data, not failures."""

    kind: str          # "shared-coordinate" | "co-circular"
    axis: int | None   # axis index for coordinate collisions
    value: int | None  # the shared coordinate value
    indices: tuple     # indices of the offending points


def _cocircular(a, b, c, d) -> bool:
    """Exact test: do four points lie on a common circle (or line)?

    Vanishing of the lifted 3x3 determinant with row (x-dx, y-dy, |.|^2 terms).
    """
    rows = []
    for p in (a, b, c):
        ex, ey = p[0] - d[0], p[1] - d[1]
        rows.append((ex, ey, ex * (p[0] + d[0]) + ey * (p[1] + d[1])))
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = rows
    det = (a0 * (b1 * c2 - b2 * c1)
           - a1 * (b0 * c2 - b2 * c0)
           + a2 * (b0 * c1 - b1 * c0))
    return det == 0


def validate_general_position(ps: PointSet, cocircular_cap: int = 64) -> list:
    """Report every general-position violation of ps.

    Coordinate collisions are reported per axis.  For d = 2 and n within the
    cap, every exactly co-circular (or collinear) 4-subset is also reported.
    Sets ps.general_position_checked when the report is empty.
    """
    if len(ps) == 0:
        raise GeoSelectError("point set must be nonempty")
    violations = []
    for axis in range(ps.dim):
        by_value: dict = {}
        for i, p in enumerate(ps.points):
            by_value.setdefault(p[axis], []).append(i)
        for value, idxs in sorted(by_value.items()):
            if len(idxs) > 1:
                violations.append(Violation("shared-coordinate", axis, value, tuple(idxs)))
    if ps.dim == 2 and len(ps) <= cocircular_cap:
        for quad in combinations(range(len(ps)), 4):
            a, b, c, d = (ps.points[i] for i in quad)
            if _cocircular(a, b, c, d):
                violations.append(Violation("co-circular", None, None, quad))
    if not violations:
        ps.general_position_checked = True
    return violations


def as_rational(p: AnyPoint) -> RationalPoint:
    return tuple(Fraction(c) for c in p)


def is_integral(p: AnyPoint) -> bool:
    return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
               for c in p)


# ---------------------------------------------------------------------------
# Point-set file format (bit-exact):
#   first line  `dim <d>`; each following non-empty line holds d decimal
#   integers; `#` starts a comment line.  Down-triangle sets use the same
#   format in the sheared (u, v) frame and carry a `# frame=sheared` comment.
# ---------------------------------------------------------------------------

def dump_points(ps: PointSet, path, comments: Sequence[str] = ()) -> None:
    lines = []
    for c in comments:
        lines.append(f"# {c}")
    lines.append(f"dim {ps.dim}")
    for p in ps.points:
        lines.append(" ".join(str(c) for c in p))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_points(path) -> PointSet:
    dim = None
    pts = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if dim is None:
                head = line.split()
                if len(head) != 2 or head[0] != "dim":
                    raise GeoSelectError(f"expected 'dim <d>' header, got {line!r}")
                dim = int(head[1])
                continue
            pts.append(tuple(int(tok) for tok in line.split()))
    if dim is None:
        raise GeoSelectError("missing 'dim <d>' header")
    return PointSet(dim, pts)
