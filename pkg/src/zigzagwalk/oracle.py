"""Brute-force ground truth and exact trace audits.

Everything here trades speed for being obviously correct: location answers
come from an exhaustive closed-face scan, and recorded walks are re-verified
step by step with the same exact predicates the walk itself uses.  A float
prefilter only skips faces whose sign is certified by an error bound; any
uncertain face falls through to exact arithmetic.
"""

from __future__ import annotations

from typing import List, NamedTuple

import numpy as np

from .geometry2d import (
    Ordering,
    PointOnEdge,
    od_compare,
    on_closed_segment,
    orientation,
    oriented_distance,
    point_in_triangle,
)
from .mesh import OUTER_FACE, Mesh
from .predicates import _CCW_BOUND
from .walk import WalkTrace


class LocationAnswer(NamedTuple):
    faces: tuple          # sorted face ids whose closed triangle contains p
    on_boundary_of_hull: bool

    @property
    def inside(self) -> bool:
        return bool(self.faces)


def _certified_signs(ax, ay, bx, by, px, py):
    """Per-element sign of orient(a, b, p), or 0 where floats cannot tell."""
    l = (ax - px) * (by - py)
    r = (ay - py) * (bx - px)
    det = l - r
    err = _CCW_BOUND * (np.abs(l) + np.abs(r))
    out = np.zeros(det.shape, dtype=np.int8)
    out[det > err] = 1
    out[det < -err] = -1
    return out


def brute_force_locate(m: Mesh, p) -> LocationAnswer:
    """Exhaustive exact point-in-closed-face scan over every interior face.

    The vectorized pass resolves faces whose three edge orientations are
    certified; the rest are settled by the exact test one by one.
    """
    px, py = float(p[0]), float(p[1])
    ax, ay, bx, by, cx, cy = m._faces_np()
    s0 = _certified_signs(ax, ay, bx, by, px, py)
    s1 = _certified_signs(bx, by, cx, cy, px, py)
    s2 = _certified_signs(cx, cy, ax, ay, px, py)
    surely_out = (s0 < 0) | (s1 < 0) | (s2 < 0)
    surely_in = (s0 > 0) & (s1 > 0) & (s2 > 0)
    faces = list(np.nonzero(surely_in)[0])
    for f in np.nonzero(~surely_out & ~surely_in)[0]:
        a, b, c = m.face_vertices(int(f))
        if point_in_triangle(m.vertex(a), m.vertex(b), m.vertex(c), (px, py)):
            faces.append(f)
    return LocationAnswer(tuple(sorted(int(f) for f in faces)),
                          _on_hull_boundary(m, px, py))


def _on_hull_boundary(m: Mesh, px, py) -> bool:
    sax, say, sbx, sby = m._segments_np()
    lo = m._n_interior
    if lo == m.n_halfedges:
        return False
    ax, ay = sax[lo:], say[lo:]
    bx, by = sbx[lo:], sby[lo:]
    ux, uy = bx - ax, by - ay
    wx, wy = px - ax, py - ay
    uu = ux * ux + uy * uy
    t = np.clip(np.divide(wx * ux + wy * uy, uu, out=np.zeros_like(uu),
                          where=uu > 0), 0.0, 1.0)
    dx, dy = wx - t * ux, wy - t * uy
    d2 = dx * dx + dy * dy
    mag = max(abs(px), abs(py),
              float(np.max(np.abs(ax))), float(np.max(np.abs(ay))),
              float(np.max(np.abs(bx))), float(np.max(np.abs(by))), 1.0)
    band = (1e-11 * mag) ** 2
    for i in np.nonzero(d2 <= band)[0]:
        seg = ((float(ax[i]), float(ay[i])), (float(bx[i]), float(by[i])))
        if (orientation(seg[0], seg[1], (px, py)) == 0
                and on_closed_segment(seg, (px, py))):
            return True
    return False


def audit_trace(m: Mesh, trace: WalkTrace, p) -> List[str]:
    """Exactly re-verify a recorded walk; returns the list of violations.

    Checks, per step: edge connectivity against the successor convention,
    the choice label against a fresh exact comparison, the half-space
    invariant (p strictly left of every edge stepped onto), strict descent
    of the oriented distance, and that the recorded (d, alpha) snapshots
    reproduce.  An empty report means the trace is clean.
    """
    report: List[str] = []
    p = (float(p[0]), float(p[1]))
    e0 = trace.start_edge
    if not (0 <= e0 < m.n_halfedges):
        return [f"start edge {e0} out of range"]
    if m.face(e0) == OUTER_FACE:
        report.append(f"start edge {e0} is a boundary halfedge")
        return report
    entries = list(trace.steps)
    if trace.bootstrap_inverted:
        if not entries or entries[0].choice != "B":
            report.append("bootstrap inversion flagged but no leading B entry")
        else:
            if entries[0].edge != e0:
                report.append(
                    f"B entry edge {entries[0].edge} is not the start edge {e0}")
            entries = entries[1:]
        a, b = m.segment(m.inv(e0))
        if orientation(a, b, p) >= 0:
            report.append("bootstrap inverted although the point was not "
                          "strictly right of the original edge")
    else:
        a, b = m.segment(e0)
        if orientation(a, b, p) < 0:
            report.append("point strictly right of start edge but no "
                          "bootstrap inversion recorded")
    for i, s in enumerate(entries):
        if s.choice == "B":
            report.append(f"step {i}: stray B entry")
            return report

    cur = e0
    for i, s in enumerate(entries):
        if m.face(cur) == OUTER_FACE:
            report.append(f"step {i}: walk continued from boundary halfedge {cur}")
            break
        left = m.inv(m.prev(cur))
        right = m.inv(m.next(cur))
        expected = left if s.choice == "L" else right
        if s.choice not in ("L", "R"):
            report.append(f"step {i}: unknown choice {s.choice!r}")
            break
        if s.edge != expected:
            report.append(
                f"step {i}: connectivity: edge {s.edge} is not the "
                f"{s.choice} successor {expected} of {cur}")
            break
        try:
            cmp = od_compare(m.segment(left), m.segment(right), p)
        except (PointOnEdge, ValueError) as ex:
            report.append(f"step {i}: successor comparison failed: {ex}")
            break
        if cmp is Ordering.LESS and s.choice != "L":
            report.append(f"step {i}: choice R although left is strictly closer")
        elif cmp is Ordering.GREATER and s.choice != "R":
            report.append(f"step {i}: choice L although right is strictly closer")

        a, b = m.segment(s.edge)
        if orientation(a, b, p) <= 0:
            report.append(
                f"step {i}: half-space: point not strictly left of edge {s.edge}")
        try:
            if od_compare(m.segment(s.edge), m.segment(cur), p) is not Ordering.LESS:
                report.append(
                    f"step {i}: descent: oriented distance did not strictly "
                    f"decrease from edge {cur} to {s.edge}")
        except (PointOnEdge, ValueError) as ex:
            report.append(f"step {i}: descent comparison failed: {ex}")
        try:
            od = oriented_distance((a, b), p)
        except PointOnEdge:
            od = None
        if od is None:
            report.append(f"step {i}: point lies on stepped edge {s.edge}")
        else:
            tol = 1e-12
            if (abs(od.d - s.od.d) > tol * max(1.0, od.d)
                    or abs(od.alpha_display - s.od.alpha_display) > tol):
                report.append(
                    f"step {i}: recorded (d, alpha) snapshot does not reproduce")
        cur = s.edge
        if m.face(cur) == OUTER_FACE and i != len(entries) - 1:
            report.append(f"step {i}: crossed the hull with steps remaining")
            break
    return report


def link_distance_stats(m: Mesh, trace: WalkTrace) -> dict:
    """Step and atomic-operation counts for a recorded walk.

    Fixed accounting: every crossing costs three atomic halfedge relations
    (one next or prev to reach the far side, one inv to cross, one next to
    re-anchor in the new face), plus one inv when the bootstrap inverted
    the start edge.  A 0-step walk therefore costs 0 or 1.
    """
    steps = sum(1 for s in trace.steps if s.choice != "B")
    return {"steps": steps,
            "atomic_ops": 3 * steps + (1 if trace.bootstrap_inverted else 0)}
