"""The zig-zag point-location walk.

From any starting halfedge the walk repeats one memoryless move: if the
query point p is in the current edge's face, stop; otherwise cross into the
face of whichever of the two successor edges (the far sides of the current
face) has the smaller oriented distance [d, alpha] to p.  Because that
measure strictly decreases at every crossing and only finitely many edges
are at least as close as the start, the walk terminates without keeping any
visited set.  Ties between the two successors are broken by policy.

Successor convention: for current halfedge e whose face is (e1, e2, tip)
with e running e1->e2, the left successor runs e1->tip (it is inv(prev(e)))
and the right successor runs tip->e2 (inv(next(e))).

On a finite mesh the walk can be forced across the hull; crossing a
boundary halfedge reports Boundary instead of continuing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .geometry2d import (
    Ordering,
    OrientedDistance,
    PointOnEdge,
    od_compare,
    on_closed_segment,
    orientation,
    oriented_distance,
    point_in_triangle,
)
from .mesh import OUTER_FACE, Mesh


class BoundaryStart(Exception):
    """The side of the start edge facing the point is the outer face."""

    def __init__(self, msg: str, edge: int = -1):
        super().__init__(msg)
        self.edge = edge


class InvariantViolation(Exception):
    """A per-step check failed; the walk state is reported in the message."""


class WalkStatus(enum.Enum):
    FOUND = "found"
    BOUNDARY = "boundary"
    ABORTED = "aborted"


class TieBreakPolicy:
    """Choice rule when both successors are at the same oriented distance.

    RandomSeeded draws one bit per tie from a counter-based generator keyed
    by (seed, step index), so equal seeds replay identical walks and there
    is no hidden stream state.
    """

    __slots__ = ("kind", "seed")

    def __init__(self, kind: str, seed: int = 0):
        if kind not in ("right", "left", "random"):
            raise ValueError(f"unknown tie-break kind {kind!r}")
        self.kind = kind
        self.seed = int(seed)

    def __repr__(self):
        if self.kind == "random":
            return f"TieBreakPolicy('random', seed={self.seed})"
        return f"TieBreakPolicy({self.kind!r})"

    def __eq__(self, other):
        return (isinstance(other, TieBreakPolicy)
                and self.kind == other.kind and self.seed == other.seed)

    def take_right(self, step_index: int) -> bool:
        if self.kind == "right":
            return True
        if self.kind == "left":
            return False
        return _splitmix64((self.seed << 1) ^ 0x9E3779B97F4A7C15 ^ step_index) & 1 == 0


RIGHT_FIRST = TieBreakPolicy("right")
LEFT_FIRST = TieBreakPolicy("left")


def random_seeded(seed: int) -> TieBreakPolicy:
    return TieBreakPolicy("random", seed)


_M64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _M64
    return x ^ (x >> 31)


@dataclass(frozen=True)
class WalkConfig:
    policy: TieBreakPolicy = RIGHT_FIRST
    max_steps: Optional[int] = None  # None: number of undirected edges + 1
    record_trace: bool = False
    check_invariants: bool = False


@dataclass(frozen=True)
class WalkStep:
    edge: int
    choice: str  # "L" | "R" | "B"
    od: OrientedDistance


@dataclass
class WalkTrace:
    point: tuple
    start_edge: int
    bootstrap_inverted: bool
    steps: list = field(default_factory=list)


@dataclass(frozen=True)
class WalkResult:
    status: WalkStatus
    face: Optional[int] = None   # set for FOUND
    edge: Optional[int] = None   # crossed boundary halfedge for BOUNDARY
    steps: int = 0
    reason: Optional[str] = None  # set for ABORTED

    @property
    def found(self) -> bool:
        return self.status is WalkStatus.FOUND


def successors(m: Mesh, e: int):
    """Left and right successor halfedges of interior halfedge e.

    Left shares e's origin and runs toward the face apex; right runs from
    the apex to e's destination.  Either may be a boundary halfedge.
    """
    return m.inv(m.prev(e)), m.inv(m.next(e))


def bootstrap(m: Mesh, e: int, p) -> int:
    """Normalize the start edge so the query point is not to its right.

    Returns e when p is strictly left or collinear, inv(e) when strictly
    right.  Raises PointOnEdge when p is on the closed segment (the caller
    should test the incident faces directly) and BoundaryStart when the
    required side has no interior face.
    """
    a, b = m.segment(e)
    o = orientation(a, b, p)
    if o < 0:
        e = m.inv(e)
    elif o == 0 and on_closed_segment((a, b), p):
        raise PointOnEdge(f"point {tuple(p)} lies on halfedge {e}")
    if m.face(e) == OUTER_FACE:
        raise BoundaryStart(
            f"point {tuple(p)} is on the outer side of boundary halfedge {e}",
            edge=e)
    return e


def _face_contains(m: Mesh, f: int, p) -> bool:
    a, b, c = m.face_vertices(f)
    return point_in_triangle(m.vertex(a), m.vertex(b), m.vertex(c), p)


def locate(m: Mesh, e_init: int, p, cfg: WalkConfig = None):
    """Walk from e_init until the face containing p is found.

    Returns (WalkResult, WalkTrace or None).  The result is Found with its
    face, Boundary with the crossed hull halfedge (the crossing counts as a
    step), or Aborted when the max_steps guard fires.  With
    cfg.check_invariants every crossing re-verifies, exactly, that p stays
    strictly left of the new edge and that the oriented distance strictly
    decreased; a failure raises InvariantViolation.
    """
    if cfg is None:
        cfg = WalkConfig()
    p = (float(p[0]), float(p[1]))
    max_steps = cfg.max_steps if cfg.max_steps is not None else m.n_edges + 1
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")

    # p on the start segment: both incident closed faces contain p, so
    # answer directly instead of bootstrapping (the measure is undefined).
    seg = m.segment(e_init)
    if orientation(seg[0], seg[1], p) == 0 and on_closed_segment(seg, p):
        for cand in (e_init, m.inv(e_init)):
            f = m.face(cand)
            if f != OUTER_FACE:
                trace = WalkTrace(p, cand, False) if cfg.record_trace else None
                return WalkResult(WalkStatus.FOUND, face=f, steps=0), trace
        raise AssertionError("edge with two outer faces")

    e = bootstrap(m, e_init, p)
    inverted = e != e_init
    trace = WalkTrace(p, e, inverted) if cfg.record_trace else None
    if trace is not None and inverted:
        trace.steps.append(WalkStep(e, "B", oriented_distance(m.segment(e), p)))

    steps = 0
    while True:
        f = m.face(e)
        if _face_contains(m, f, p):
            return WalkResult(WalkStatus.FOUND, face=f, steps=steps), trace
        if steps >= max_steps:
            return (WalkResult(WalkStatus.ABORTED, steps=steps,
                               reason=f"max_steps={max_steps} exhausted"), trace)
        left, right = successors(m, e)
        cmp = od_compare(m.segment(left), m.segment(right), p)
        if cmp is Ordering.LESS:
            chosen, label = left, "L"
        elif cmp is Ordering.GREATER:
            chosen, label = right, "R"
        elif cfg.policy.take_right(steps):
            chosen, label = right, "R"
        else:
            chosen, label = left, "L"

        if cfg.check_invariants:
            ca, cb = m.segment(chosen)
            if orientation(ca, cb, p) <= 0:
                raise InvariantViolation(
                    f"step {steps}: point not strictly left of chosen edge {chosen}")
            if od_compare(m.segment(chosen), m.segment(e), p) is not Ordering.LESS:
                raise InvariantViolation(
                    f"step {steps}: oriented distance did not decrease at edge {chosen}")

        steps += 1
        if trace is not None:
            trace.steps.append(WalkStep(chosen, label, oriented_distance(m.segment(chosen), p)))
        if m.face(chosen) == OUTER_FACE:
            return WalkResult(WalkStatus.BOUNDARY, edge=chosen, steps=steps), trace
        e = chosen


def visibility_walk_baseline(m: Mesh, e_init: int, p, seed: int = 0,
                             max_steps: Optional[int] = None) -> WalkResult:
    """Remembering stochastic visibility walk, as a benchmark baseline.

    Crosses any face edge that has p strictly on its far side, picked in
    seeded random order, never re-testing the edge it just came through.
    Deterministic for a fixed seed.  Unlike the zig-zag walk this one is
    only guaranteed to terminate on Delaunay meshes, hence the guard.
    """
    import random

    p = (float(p[0]), float(p[1]))
    rng = random.Random(seed)
    if max_steps is None:
        max_steps = 2 * m.n_edges + 1
    e = e_init
    if m.face(e) == OUTER_FACE:
        e = m.inv(e)
    f = m.face(e)
    came_from = None
    steps = 0
    while True:
        if _face_contains(m, f, p):
            return WalkResult(WalkStatus.FOUND, face=f, steps=steps)
        if steps >= max_steps:
            return WalkResult(WalkStatus.ABORTED, steps=steps,
                              reason=f"max_steps={max_steps} exhausted")
        order = [3 * f, 3 * f + 1, 3 * f + 2]
        rng.shuffle(order)
        moved = False
        for h in order:
            if h == came_from:
                continue
            a, b = m.segment(h)
            if orientation(a, b, p) < 0:
                nh = m.inv(h)
                steps += 1
                if m.face(nh) == OUTER_FACE:
                    return WalkResult(WalkStatus.BOUNDARY, edge=nh, steps=steps)
                came_from = nh
                f = m.face(nh)
                moved = True
                break
        if not moved:
            # p is outside the face yet right of no edge: exact tests make
            # this unreachable
            raise AssertionError(f"visibility walk stuck at face {f}")


def trace_json_obj(trace: WalkTrace, result: WalkResult) -> dict:
    """Stable JSON form of a walk trace.

    steps[*].choice is "B" for a bootstrap inversion (at most once, first)
    and "L"/"R" for crossings; d and alpha are display floats of the
    oriented distance of the step's edge.
    """
    steps = [{"edge": s.edge, "choice": s.choice,
              "d": s.od.d, "alpha": s.od.alpha_display} for s in trace.steps]
    res = {"status": result.status.value, "steps": result.steps}
    if result.face is not None:
        res["face"] = result.face
    if result.edge is not None:
        res["edge"] = result.edge
    if result.reason is not None:
        res["reason"] = result.reason
    return {"point": list(trace.point), "start_edge": trace.start_edge,
            "bootstrap_inverted": trace.bootstrap_inverted,
            "steps": steps, "result": res}
