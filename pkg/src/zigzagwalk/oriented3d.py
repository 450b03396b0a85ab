"""Three-dimensional oriented distance [d, alpha, beta] to a triangle.

Experimental comparator only; there is no tetrahedral walk.  Unlike the 2D
measure this module uses plain floating point with a documented tolerance.

Definitions.  Let q be the closest point of the closed triangle to p and
w = p - q the ray from the foot to the target.  A roll axis is a direction
u in the triangle's plane, anchored at q and pointing into the triangle
(when q is interior every direction qualifies; on an edge the admissible
set is the closed half-circle facing the triangle; at a vertex it is the
closed wedge between the two incident edges).  The pitch angle is the
angle between w and u.  The pitch axis is perpendicular to both, and the
roll angle is the angle between the triangle's plane and the plane spanned
by the roll and pitch axes, an absolute angle in [0, pi/2].  The measure
takes the roll axis that minimizes the pitch angle first and the roll
angle second.

Closed forms.  The closest-point property forces w . u <= 0 for every
admissible u, so the pitch angle lives in [pi/2, pi] like the 2D alpha.
Writing w_perp(u) = w - (w.u)u, the roll-pitch plane's normal is parallel
to w_perp, so roll(u) = arccos(|n . unit(w_perp(u))|) with n the triangle
normal.

  * Interior foot: w is parallel to n, every u gives pitch pi/2 and
    w_perp = w, so alpha = pi/2 and beta = 0.
  * Edge foot: w is perpendicular to the edge direction e.  For u at
    angle theta from e inside the half-circle, w . u = -sin(theta) w_in
    with w_in >= 0 the in-plane offset, so pitch is minimized exactly at
    u = +-e (or ties everywhere when w_in = 0).  Both give
    w_perp = w: alpha = pi/2, beta = arccos(|n . unit(w)|).
  * Vertex foot: w . u restricted to the wedge arc is a cosine of the
    angular distance to w's in-plane direction, which the closest-point
    property places outside the wedge; its maximum over the arc is
    therefore attained at an arc endpoint, i.e. at one of the two edge
    directions leaving the vertex.  The measure is the lexicographic
    minimum of (pitch, roll) over those two candidates.  (When w has no
    in-plane part the arc ties at pi/2 and roll is 0 everywhere, which the
    endpoint formula reproduces.)
"""

from __future__ import annotations

import math
from typing import NamedTuple, Tuple

import numpy as np

from .geometry2d import Ordering

COMPARE_TOL = 1e-12


class PointOnFace(Exception):
    """The query point lies on the closed triangle; the ray is undefined."""


class Feature(NamedTuple):
    kind: str   # "face" | "edge" | "vertex"
    index: int  # edge i runs vertex i -> i+1 (mod 3); -1 for the face

    def __repr__(self):
        if self.kind == "face":
            return "Face"
        return f"{self.kind.capitalize()}({self.index})"


FACE = Feature("face", -1)


class OrientedDistance3(NamedTuple):
    d2: float     # squared distance to the closed triangle
    alpha: float  # minimal pitch angle, radians
    beta: float   # roll angle of the pitch-minimizing axis, radians


def _tri_array(t):
    arr = np.asarray(t, dtype=float)
    if arr.shape != (3, 3) or not np.all(np.isfinite(arr)):
        raise ValueError("triangle must be three finite 3D points")
    return arr


def closest_point_on_triangle(t, p) -> Tuple[np.ndarray, Feature]:
    """Closest point of the closed triangle to p and the feature it lies on.

    Region classification on the barycentric gradients; the foot is exact
    up to float rounding.  Raises PointOnFace when the foot coincides
    with p.
    """
    tri = _tri_array(t)
    a, b, c = tri
    p = np.asarray(p, dtype=float)
    if p.shape != (3,) or not np.all(np.isfinite(p)):
        raise ValueError("point must be a finite 3D point")

    ab = b - a
    ac = c - a
    ap = p - a
    d1 = float(ab @ ap)
    d2 = float(ac @ ap)
    if d1 <= 0.0 and d2 <= 0.0:
        return _checked(a, p, Feature("vertex", 0))

    bp = p - b
    d3 = float(ab @ bp)
    d4 = float(ac @ bp)
    if d3 >= 0.0 and d4 <= d3:
        return _checked(b, p, Feature("vertex", 1))

    vc = d1 * d4 - d3 * d2
    if vc <= 0.0 and d1 >= 0.0 and d3 <= 0.0:
        v = d1 / (d1 - d3)
        return _checked(a + v * ab, p, Feature("edge", 0))

    cp = p - c
    d5 = float(ab @ cp)
    d6 = float(ac @ cp)
    if d6 >= 0.0 and d5 <= d6:
        return _checked(c, p, Feature("vertex", 2))

    vb = d5 * d2 - d1 * d6
    if vb <= 0.0 and d2 >= 0.0 and d6 <= 0.0:
        u = d2 / (d2 - d6)
        return _checked(a + u * ac, p, Feature("edge", 2))

    va = d3 * d6 - d4 * d5
    if va <= 0.0 and d4 - d3 >= 0.0 and d5 - d6 >= 0.0:
        u = (d4 - d3) / ((d4 - d3) + (d5 - d6))
        return _checked(b + u * (c - b), p, Feature("edge", 1))

    denom = va + vb + vc
    v = vb / denom
    u = vc / denom
    return _checked(a + v * ab + u * ac, p, FACE)


def _checked(foot, p, feature):
    w = p - foot
    mag = max(float(np.max(np.abs(foot))), float(np.max(np.abs(p))), 1.0)
    if float(w @ w) <= (1e-14 * mag) ** 2:
        raise PointOnFace(f"point {tuple(p)} lies on the closed triangle")
    return foot, feature


def _unit_normal(tri):
    n = np.cross(tri[1] - tri[0], tri[2] - tri[0])
    norm = float(np.linalg.norm(n))
    if norm == 0.0 or not math.isfinite(norm):
        raise ValueError("degenerate triangle")
    return n / norm


def _roll(n, w, u):
    # angle between the face plane and the roll-pitch plane, whose normal
    # is the component of w perpendicular to the axis u
    wp = w - (float(w @ u)) * u
    wp2 = float(wp @ wp)
    if wp2 <= 1e-30 * float(w @ w):
        return math.pi / 2  # w parallel to the axis: plane undefined, worst case
    return math.acos(min(1.0, abs(float(n @ wp)) / math.sqrt(wp2)))


def oriented_distance3(t, p, ret_feature: bool = False):
    """The [d2, alpha, beta] measure from p to the closed triangle.

    With ret_feature=True also returns the closest-point feature, which
    flags the edge and vertex feet where the admissible axis set was
    restricted.
    """
    tri = _tri_array(t)
    foot, feature = closest_point_on_triangle(tri, p)
    w = np.asarray(p, dtype=float) - foot
    d2 = float(w @ w)
    n = _unit_normal(tri)

    if feature.kind == "face":
        od = OrientedDistance3(d2, math.pi / 2, 0.0)
    elif feature.kind == "edge":
        # w is perpendicular to the edge; the two along-edge axes minimize
        # pitch and share w_perp = w
        wn = abs(float(n @ w)) / math.sqrt(d2)
        od = OrientedDistance3(d2, math.pi / 2, math.acos(min(1.0, wn)))
    else:
        i = feature.index
        v = tri[i]
        best = None
        for other in (tri[(i + 1) % 3], tri[(i + 2) % 3]):
            e = other - v
            e = e / float(np.linalg.norm(e))
            cos_a = float(w @ e) / math.sqrt(d2)
            # closest-point property bounds w.e at zero; clamp rounding
            alpha = math.acos(max(-1.0, min(0.0, cos_a)))
            cand = (alpha, _roll(n, w, e))
            if best is None or cand < best:
                best = cand
        od = OrientedDistance3(d2, best[0], best[1])
    return (od, feature) if ret_feature else od


def od3_compare(a: OrientedDistance3, b: OrientedDistance3,
                tol: float = COMPARE_TOL) -> Ordering:
    """Lexicographic comparison of two measures.

    Components within tol of each other count as tied; this module is
    floating-point throughout, unlike the exact 2D comparator.
    """
    for x, y in ((a.d2, b.d2), (a.alpha, b.alpha), (a.beta, b.beta)):
        if x < y - tol:
            return Ordering.LESS
        if x > y + tol:
            return Ordering.GREATER
    return Ordering.EQUAL
