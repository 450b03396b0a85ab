"""Walk behavior: bootstrap, stepping, policies, boundary handling."""

import numpy as np
import pytest

from support import in_hull_points, single_triangle, square_mesh, two_row_strip
from zigzagwalk.geometry2d import PointOnEdge, point_in_triangle
from zigzagwalk.mesh import OUTER_FACE
from zigzagwalk.meshgen import GenSpec, generate
from zigzagwalk.oracle import brute_force_locate
from zigzagwalk.walk import (
    LEFT_FIRST,
    RIGHT_FIRST,
    BoundaryStart,
    WalkConfig,
    WalkStatus,
    bootstrap,
    locate,
    random_seeded,
    successors,
    visibility_walk_baseline,
)


def test_bootstrap_orientation_cases():
    m = square_mesh()   # halfedge 2 is the diagonal (2,2)->(0,0), twin 3
    assert bootstrap(m, 2, (1.5, 0.5)) == 2
    assert bootstrap(m, 2, (0.5, 1.5)) == 3
    assert bootstrap(m, 3, (1.5, 0.5)) == 2
    with pytest.raises(PointOnEdge):
        bootstrap(m, 2, (1.0, 1.0))
    # collinear beyond the segment keeps the edge
    assert bootstrap(m, 2, (3.0, 3.0)) == 2


def test_bootstrap_boundary_start():
    m = single_triangle()
    with pytest.raises(BoundaryStart) as exc:
        bootstrap(m, 0, (1.0, -1.0))    # below the hull's bottom edge
    assert exc.value.edge == m.inv(0)
    with pytest.raises(BoundaryStart):
        bootstrap(m, m.inv(0), (1.0, -1.0))


def test_successor_convention():
    m = single_triangle()
    left, right = successors(m, 0)
    # left shares edge 0's origin, right ends at edge 0's destination
    assert m.segment(left) == ((0.0, 0.0), (0.0, 2.0))
    assert m.segment(right) == ((0.0, 2.0), (2.0, 0.0))


def test_found_in_start_face():
    m = single_triangle()
    res, tr = locate(m, 0, (0.5, 0.5), WalkConfig(record_trace=True))
    assert res.status is WalkStatus.FOUND
    assert res.face == 0 and res.steps == 0
    assert tr.steps == [] and not tr.bootstrap_inverted


def test_bootstrap_inversion_recorded():
    m = single_triangle()
    for e in range(3, 6):
        res, tr = locate(m, e, (0.5, 0.5), WalkConfig(record_trace=True))
        assert res.found and res.face == 0 and res.steps == 0
        assert tr.bootstrap_inverted
        assert tr.steps[0].choice == "B" and tr.steps[0].edge == tr.start_edge


def test_point_on_start_segment_short_circuits():
    m = single_triangle()
    for e in (0, 3):
        res, tr = locate(m, e, (1.0, 0.0), WalkConfig(record_trace=True))
        assert res.found and res.face == 0 and res.steps == 0
    res, _ = locate(m, 1, (0.0, 0.0))   # vertex of the mesh
    assert res.found and res.face == 0


def test_two_row_strip_detours():
    """Query above the tip: two steps around it, either way by policy."""
    m = two_row_strip()
    p = (0.0, 1.5)
    a, b, c = (m.vertex(v) for v in m.face_vertices(2))
    assert point_in_triangle(a, b, c, p)
    res, tr = locate(m, 0, p, WalkConfig(policy=RIGHT_FIRST, record_trace=True,
                                         check_invariants=True))
    assert res.found and res.face == 2 and res.steps == 2
    assert [s.choice for s in tr.steps] == ["R", "L"]
    res, tr = locate(m, 0, p, WalkConfig(policy=LEFT_FIRST, record_trace=True,
                                         check_invariants=True))
    assert res.found and res.face == 2 and res.steps == 2
    assert [s.choice for s in tr.steps] == ["L", "R"]


def test_boundary_crossing_counts_as_step():
    m = single_triangle()
    res, tr = locate(m, 1, (0.5, -1.0), WalkConfig(record_trace=True))
    assert res.status is WalkStatus.BOUNDARY
    assert res.steps == 1 and res.edge == tr.steps[-1].edge
    assert m.face(res.edge) == OUTER_FACE


def test_collinear_start_walks_to_boundary():
    # p on edge 0's support line beyond the far endpoint
    m = single_triangle()
    res, _ = locate(m, 0, (3.0, 0.0), WalkConfig(record_trace=True))
    assert res.status is WalkStatus.BOUNDARY and res.steps == 1


def test_max_steps_guard_aborts():
    m = generate(GenSpec("grid", n=6))
    res, _ = locate(m, 0, (5.9, 5.9), WalkConfig(max_steps=1))
    assert res.status is WalkStatus.ABORTED
    assert "max_steps" in res.reason


def test_random_policy_replays():
    m = generate(GenSpec("grid", n=6))
    cfg = WalkConfig(policy=random_seeded(42), record_trace=True)
    r1, t1 = locate(m, 5, (3.3, 2.2), cfg)
    r2, t2 = locate(m, 5, (3.3, 2.2), cfg)
    assert r1 == r2 and t1.steps == t2.steps


def test_grid_queries_agree_with_oracle():
    m = generate(GenSpec("grid", n=10))
    rng = np.random.default_rng(1)
    pts = in_hull_points(m, 100, rng)
    starts = rng.integers(0, m.n_halfedges, size=100)
    for p, e in zip(pts, starts):
        res, tr = locate(m, int(e), p,
                         WalkConfig(record_trace=True, check_invariants=True))
        assert res.found
        assert res.face in brute_force_locate(m, p).faces
        assert res.steps <= m.neighborhood_size(tr.start_edge, p)


def test_policies_disagree_only_on_route():
    m = generate(GenSpec("grid", n=8))
    rng = np.random.default_rng(2)
    for p in in_hull_points(m, 50, rng):
        faces = set()
        for pol in (RIGHT_FIRST, LEFT_FIRST, random_seeded(7)):
            res, _ = locate(m, 0, p, WalkConfig(policy=pol))
            assert res.found
            faces.add(res.face)
        answer = brute_force_locate(m, p).faces
        assert faces <= set(answer) or len(faces.union(answer)) == len(answer)


def test_visibility_baseline_agrees():
    m = generate(GenSpec("delaunay", n=40, seed=6))
    rng = np.random.default_rng(3)
    pts = in_hull_points(m, 60, rng)
    for i, p in enumerate(pts):
        res = visibility_walk_baseline(m, int(rng.integers(0, m.n_halfedges)),
                                       p, seed=i)
        assert res.found
        assert res.face in brute_force_locate(m, p).faces
    r1 = visibility_walk_baseline(m, 4, pts[0], seed=11)
    r2 = visibility_walk_baseline(m, 4, pts[0], seed=11)
    assert r1 == r2
