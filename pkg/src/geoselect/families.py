"""Induced-object families and their dimensional applicability.

Every family is induced by an unordered pair of points of the base set: the
pair sits on the object's boundary (diagonal corners of a rectangle or box,
antipodal points of a disk, endpoints of an interval, and so on).  The slab
family is special in that each pair induces *two* objects (a vertical and a
horizontal slab), so its depth counts pairs with multiplicity up to 2.
"""

from __future__ import annotations

import enum

from .errors import DimensionMismatch


class ObjectFamily(enum.Enum):
    RECTANGLE = "rect"
    QUADRANT = "quadrant"
    VSLAB = "vslab"
    HSLAB = "hslab"
    SLAB_BOTH = "slab"
    SKYLINE = "skyline"
    BOX = "box"
    DISK = "disk"
    HYPERSPHERE = "hypersphere"
    DOWN_TRIANGLE = "downtri"
    INTERVAL = "interval"

    def applicable(self, dim: int) -> bool:
        if self in _PLANAR_ONLY:
            return dim == 2
        if self is ObjectFamily.INTERVAL:
            return dim == 1
        # Box and Hypersphere work in any dimension >= 2.
        return dim >= 2

    def require(self, dim: int) -> None:
        if not self.applicable(dim):
            raise DimensionMismatch(f"{self.value} not applicable in dimension {dim}")

    @property
    def pair_multiplicity(self) -> int:
        """Objects induced per point pair (2 for the both-slabs family)."""
        return 2 if self is ObjectFamily.SLAB_BOTH else 1

    @staticmethod
    def from_name(name: str) -> "ObjectFamily":
        for fam in ObjectFamily:
            if fam.value == name:
                return fam
        raise KeyError(f"unknown family {name!r}")


_PLANAR_ONLY = {
    ObjectFamily.RECTANGLE,
    ObjectFamily.QUADRANT,
    ObjectFamily.VSLAB,
    ObjectFamily.HSLAB,
    ObjectFamily.SLAB_BOTH,
    ObjectFamily.SKYLINE,
    ObjectFamily.DISK,
    ObjectFamily.DOWN_TRIANGLE,
}
