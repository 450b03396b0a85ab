"""Point location in planar triangulations by a memoryless zig-zag walk.

The walk crosses one edge per step, always moving to whichever candidate
edge is strictly closer to the query point under an oriented-distance
measure, so it terminates without remembering where it has been.  All
geometric decisions are exact over float coordinates.
"""

from .estimator import ZigZagLocator
from .geometry2d import (
    ClosestPointClass,
    Ordering,
    OrientedDistance,
    Point2,
    PointOnEdge,
    RegionClass,
    Segment2,
    classify_region,
    closest_point_on_segment,
    od_compare,
    oriented_distance,
    orientation,
    point_in_triangle,
)
from .mesh import Mesh, OUTER_FACE
from .walk import TieBreakPolicy, WalkConfig, WalkResult, WalkStatus, locate

__all__ = [
    "ZigZagLocator",
    "ClosestPointClass",
    "Ordering",
    "OrientedDistance",
    "Point2",
    "PointOnEdge",
    "RegionClass",
    "Segment2",
    "classify_region",
    "closest_point_on_segment",
    "od_compare",
    "oriented_distance",
    "orientation",
    "point_in_triangle",
    "Mesh",
    "OUTER_FACE",
    "TieBreakPolicy",
    "WalkConfig",
    "WalkResult",
    "WalkStatus",
    "locate",
]

__version__ = "0.1.0"
