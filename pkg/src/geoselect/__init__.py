"""Selection lemmas for induced geometric objects.

Exact depth engines for objects induced by point pairs (rectangles,
quadrants, slabs, skylines, boxes, diametral disks and hyperspheres,
downward triangles, intervals), constructive piercing-point finders for
every first-selection lower bound, extremal construction generators for the
upper-bound witnesses, and second-selection engines for intervals and
rectangles.
"""

from .errors import (CapExceeded, CertificationFailed, CoordinateTie,
                     DimensionMismatch, GeoSelectError, InvalidRange,
                     InvalidSpec, MTooLarge, NotFound, NotSymmetric,
                     RetryExhausted)
from .families import ObjectFamily
from .points import (PointSet, Violation, dump_points, load_points,
                     validate_general_position)
from .depth import (DepthResult, QuadrantCounts, contains, depth_brute,
                    depth_fast, quadrant_counts, slab_multiplicity)
from .tukey import CenterpointResult, certified_halfspace_depth, tukey_centerpoint
from .firstsel import (BoundCheck, BoundSpec, PiercingResult, Variant,
                       box_point_recursive, depth_at, hypersphere_weak_point,
                       is_origin_symmetric, quadrant_strong_point,
                       skyline_strong_point, strong_max,
                       strong_rect_centerpoint, symmetric_peel, table1_spec,
                       verify_first_selection, weak_max)
from .constructions import (ConstructionKind, ConstructionSpec, generate,
                            random_point_set, three_arc_classes,
                            verify_obtuse_pattern)
from .secondsel import (CubicReport, GridIndex, GridProfile, InducedSubset,
                        IntervalProfile, PartitionX, check_cubic_lemma,
                        delaunay_graph, dump_subset, gen_interval_upper,
                        grid_depth_map, interval_depth_profile,
                        interval_runs_by_left, load_subset, partition_rectangles,
                        planarity_check, rect_grid_points, sample_subset)

__version__ = "0.1.0"
