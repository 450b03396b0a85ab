"""Planar primitives for segment and triangle queries.

The central object is the oriented distance of a point p from a segment s:
the pair [d, alpha] where d is the Euclidean distance from p to the closed
segment and alpha the angle between w = p - e_p (e_p the closest point) and
the direction u pointing from e_p into the segment.  When e_p falls in the
segment's interior w is perpendicular to it and alpha = pi/2; when e_p is an
endpoint, the closest-point property forces w.u <= 0, so alpha always lands
in [pi/2, pi].  Pairs order lexicographically: smaller d wins, alpha breaks
ties.

All comparisons here are exact over the float coordinate values.  Distances
compare as rational d^2; the alpha tie-break avoids trigonometry entirely:
with equal d^2 the |w| factors agree, so

    alpha_a < alpha_b  <=>  cos(alpha_a) > cos(alpha_b)
                       <=>  (w_a.u_a) * |u_b| > (w_b.u_b) * |u_a|

and since both dot products are nonpositive the inequality squares (and
flips) into pure integer arithmetic.  Display values (alpha_display, the
foot point, w, u) are ordinary floats and never feed back into decisions.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

from .predicates import orient2d, scale_exponent, scaled_int


class PointOnEdge(Exception):
    """The query point lies on the closed segment; the measure is undefined."""


class DegenerateTriangle(Exception):
    """A proper counterclockwise triangle was required."""


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class ClosestPointClass(enum.Enum):
    AT_START = "at_start"
    INTERIOR = "interior"
    AT_END = "at_end"


class RegionClass(enum.Enum):
    """Position of a point relative to a face seen across one of its edges.

    The face sits to the left of the directed edge e1->e2 with apex tip.
    For a point beyond the face the classes tell which neighbouring edge is
    closer in the [d, alpha] order: the left side (e1->tip) for the I/II/III
    left classes, the right side (tip->e2) for the right ones, IV on the
    equality locus.  I_* means the closest point of that side is its outer
    endpoint, II_* an interior point, III_*/IV the shared apex.
    """

    I_L = "I_l"
    II_L = "II_l"
    III_L = "III_l"
    IV = "IV"
    III_R = "III_r"
    II_R = "II_r"
    I_R = "I_r"
    ON_FACE = "on_face"
    RIGHT_OF_SUPPORT_LINE = "right_of_support_line"


class Point2(NamedTuple):
    x: float
    y: float


class Segment2(NamedTuple):
    a: Point2
    b: Point2


class OrientedDistance(NamedTuple):
    """Display copy of the measure; comparisons recompute exactly."""

    d2: float
    closest: ClosestPointClass
    w: tuple
    u: tuple
    alpha_display: float

    @property
    def d(self) -> float:
        return math.sqrt(self.d2)


def orientation(a, b, c) -> int:
    """+1 if a,b,c wind counterclockwise, -1 clockwise, 0 collinear. Exact."""
    return orient2d(a[0], a[1], b[0], b[1], c[0], c[1])


def _segment_key(ax, ay, bx, by, px, py):
    """Exact oriented-distance key of integer point p against segment ab.

    Returns (d2_num, d2_den, cls, wu, u2) with d^2 = d2_num / d2_den,
    wu = w.u (nonpositive; 0 for interior feet) and u2 = |u|^2.
    """
    abx = bx - ax
    aby = by - ay
    apx = px - ax
    apy = py - ay
    tnum = apx * abx + apy * aby
    if tnum <= 0:
        return apx * apx + apy * apy, 1, ClosestPointClass.AT_START, tnum, abx * abx + aby * aby
    tden = abx * abx + aby * aby
    if tnum >= tden:
        bpx = px - bx
        bpy = py - by
        return bpx * bpx + bpy * bpy, 1, ClosestPointClass.AT_END, tden - tnum, tden
    ap2 = apx * apx + apy * apy
    return ap2 * tden - tnum * tnum, tden, ClosestPointClass.INTERIOR, 0, tden


def _scaled_segment_point(s, p):
    ax, ay = float(s[0][0]), float(s[0][1])
    bx, by = float(s[1][0]), float(s[1][1])
    px, py = float(p[0]), float(p[1])
    if ax == bx and ay == by:
        raise ValueError("segment endpoints coincide")
    k = scale_exponent(ax, ay, bx, by, px, py)
    return (scaled_int(ax, k), scaled_int(ay, k), scaled_int(bx, k),
            scaled_int(by, k), scaled_int(px, k), scaled_int(py, k))


def closest_point_on_segment(s, p):
    """Closest point of the closed segment to p and its class.

    The class (start endpoint / interior / end endpoint) is decided exactly;
    the returned coordinates are floats.
    """
    ai = _scaled_segment_point(s, p)
    _, _, cls, _, _ = _segment_key(*ai)
    ax, ay = float(s[0][0]), float(s[0][1])
    bx, by = float(s[1][0]), float(s[1][1])
    px, py = float(p[0]), float(p[1])
    if cls is ClosestPointClass.AT_START:
        return Point2(ax, ay), cls
    if cls is ClosestPointClass.AT_END:
        return Point2(bx, by), cls
    abx = bx - ax
    aby = by - ay
    t = ((px - ax) * abx + (py - ay) * aby) / (abx * abx + aby * aby)
    return Point2(ax + t * abx, ay + t * aby), cls


def on_closed_segment(s, p) -> bool:
    """Exact test for p lying on the closed segment s, endpoints included."""
    num, _, _, _, _ = _segment_key(*_scaled_segment_point(s, p))
    return num == 0


def oriented_distance(s, p) -> OrientedDistance:
    """The [d, alpha] measure of p against segment s, for display and traces.

    Raises PointOnEdge when p lies on the closed segment.  Decisions should
    go through od_compare, which is exact; the fields here are floats.
    """
    ai = _scaled_segment_point(s, p)
    num, _den, cls, wu, _u2 = _segment_key(*ai)
    if num == 0:
        raise PointOnEdge(f"point {tuple(p)} lies on segment {tuple(s[0])}-{tuple(s[1])}")
    foot, _ = closest_point_on_segment(s, p)
    px, py = float(p[0]), float(p[1])
    ax, ay = float(s[0][0]), float(s[0][1])
    bx, by = float(s[1][0]), float(s[1][1])
    w = (px - foot.x, py - foot.y)
    if cls is ClosestPointClass.AT_END:
        u = (ax - bx, ay - by)
    else:
        # for interior feet any segment direction serves as u
        u = (bx - ax, by - ay)
    if wu == 0:
        alpha = math.pi / 2
    else:
        cosa = (w[0] * u[0] + w[1] * u[1]) / math.sqrt(
            (w[0] * w[0] + w[1] * w[1]) * (u[0] * u[0] + u[1] * u[1]))
        # wu < 0 exactly, so clamp any stray positive rounding back to pi/2
        alpha = math.acos(max(-1.0, min(0.0, cosa)))
    d2f = (px - foot.x) ** 2 + (py - foot.y) ** 2
    return OrientedDistance(d2f, cls, w, u, alpha)


def _compare_keys(ka, kb) -> Ordering:
    numa, dena, _, wua, u2a = ka
    numb, denb, _, wub, u2b = kb
    lhs = numa * denb
    rhs = numb * dena
    if lhs != rhs:
        return Ordering.LESS if lhs < rhs else Ordering.GREATER
    if wua == 0 and wub == 0:
        return Ordering.EQUAL
    if wua == 0:
        return Ordering.LESS
    if wub == 0:
        return Ordering.GREATER
    # both dots negative: a < b  <=>  wua*|u_b| > wub*|u_a|, square and flip
    lhs2 = wua * wua * u2b
    rhs2 = wub * wub * u2a
    if lhs2 != rhs2:
        return Ordering.LESS if lhs2 < rhs2 else Ordering.GREATER
    return Ordering.EQUAL


def od_compare(sa, sb, p) -> Ordering:
    """Exact lexicographic [d, alpha] comparison of two segments against p.

    Raises PointOnEdge if p lies on either closed segment.
    """
    k = scale_exponent(float(sa[0][0]), float(sa[0][1]), float(sa[1][0]), float(sa[1][1]),
                       float(sb[0][0]), float(sb[0][1]), float(sb[1][0]), float(sb[1][1]),
                       float(p[0]), float(p[1]))
    ints = [scaled_int(float(v), k)
            for v in (sa[0][0], sa[0][1], sa[1][0], sa[1][1],
                      sb[0][0], sb[0][1], sb[1][0], sb[1][1], p[0], p[1])]
    if ints[0] == ints[2] and ints[1] == ints[3]:
        raise ValueError("segment endpoints coincide")
    if ints[4] == ints[6] and ints[5] == ints[7]:
        raise ValueError("segment endpoints coincide")
    ka = _segment_key(ints[0], ints[1], ints[2], ints[3], ints[8], ints[9])
    kb = _segment_key(ints[4], ints[5], ints[6], ints[7], ints[8], ints[9])
    if ka[0] == 0 or kb[0] == 0:
        raise PointOnEdge(f"point {tuple(p)} lies on a compared segment")
    return _compare_keys(ka, kb)


def point_in_triangle(a, b, c, p) -> bool:
    """Closed containment test for a counterclockwise triangle.  Exact."""
    if orientation(a, b, c) <= 0:
        raise DegenerateTriangle(f"triangle {tuple(a)},{tuple(b)},{tuple(c)} is not proper CCW")
    return (orientation(a, b, p) >= 0
            and orientation(b, c, p) >= 0
            and orientation(c, a, p) >= 0)


def classify_region(e1, e2, tip, p) -> RegionClass:
    """Classify p against the face (e1, e2, tip) seen across edge e1->e2.

    The left neighbour side runs e1->tip, the right side tip->e2.  Points on
    the closed face report ON_FACE; points strictly right of the e1->e2 line
    report RIGHT_OF_SUPPORT_LINE; everything else falls into the seven
    [d, alpha] classes.
    """
    if point_in_triangle(e1, e2, tip, p):
        return RegionClass.ON_FACE
    if orientation(e1, e2, p) < 0:
        return RegionClass.RIGHT_OF_SUPPORT_LINE
    k = scale_exponent(float(e1[0]), float(e1[1]), float(e2[0]), float(e2[1]),
                       float(tip[0]), float(tip[1]), float(p[0]), float(p[1]))
    e1i = (scaled_int(float(e1[0]), k), scaled_int(float(e1[1]), k))
    e2i = (scaled_int(float(e2[0]), k), scaled_int(float(e2[1]), k))
    tipi = (scaled_int(float(tip[0]), k), scaled_int(float(tip[1]), k))
    pi_ = (scaled_int(float(p[0]), k), scaled_int(float(p[1]), k))
    kl = _segment_key(e1i[0], e1i[1], tipi[0], tipi[1], pi_[0], pi_[1])
    kr = _segment_key(tipi[0], tipi[1], e2i[0], e2i[1], pi_[0], pi_[1])
    dl = kl[0] * kr[1]
    dr = kr[0] * kl[1]
    if dl < dr:
        if kl[2] is ClosestPointClass.AT_START:
            return RegionClass.I_L
        assert kl[2] is ClosestPointClass.INTERIOR, "apex foot cannot win on the left"
        return RegionClass.II_L
    if dl > dr:
        if kr[2] is ClosestPointClass.AT_END:
            return RegionClass.I_R
        assert kr[2] is ClosestPointClass.INTERIOR, "apex foot cannot win on the right"
        return RegionClass.II_R
    cmp = _compare_keys(kl, kr)
    if cmp is Ordering.LESS:
        return RegionClass.III_L
    if cmp is Ordering.GREATER:
        return RegionClass.III_R
    return RegionClass.IV
