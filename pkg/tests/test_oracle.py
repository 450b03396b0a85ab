"""Ground-truth scan, trace auditing, and the cost accounting."""

import copy

import numpy as np

from support import in_hull_points, single_triangle, square_mesh, two_row_strip
from zigzagwalk.geometry2d import oriented_distance
from zigzagwalk.meshgen import GenSpec, generate
from zigzagwalk.oracle import audit_trace, brute_force_locate, link_distance_stats
from zigzagwalk.walk import WalkConfig, WalkStep, locate


def test_brute_force_single_triangle():
    m = single_triangle()
    assert brute_force_locate(m, (0.5, 0.5)).faces == (0,)
    assert brute_force_locate(m, (5.0, 5.0)).faces == ()
    ans = brute_force_locate(m, (1.0, 0.0))
    assert ans.faces == (0,) and ans.on_boundary_of_hull


def test_brute_force_shared_diagonal():
    m = square_mesh()
    ans = brute_force_locate(m, (1.0, 1.0))
    assert ans.faces == (0, 1)
    assert not ans.on_boundary_of_hull
    assert brute_force_locate(m, (0.0, 0.0)).on_boundary_of_hull


def test_brute_force_matches_vectorized_prefilter():
    """Forcing uncertain dets: queries hugging edges of a fine grid."""
    m = generate(GenSpec("grid", n=12))
    for i in range(12):
        p = (i + 0.5, float(i) + 1e-13)
        ans = brute_force_locate(m, p)
        assert ans.faces, p
        for f in ans.faces:
            a, b, c = (m.vertex(v) for v in m.face_vertices(f))
            from zigzagwalk.geometry2d import point_in_triangle
            assert point_in_triangle(a, b, c, p)


def test_clean_traces_audit_empty():
    m = generate(GenSpec("delaunay", n=50, seed=12))
    rng = np.random.default_rng(4)
    pts = in_hull_points(m, 120, rng)
    starts = rng.integers(0, m.n_halfedges, size=120)
    for p, e in zip(pts, starts):
        res, tr = locate(m, int(e), p, WalkConfig(record_trace=True))
        assert audit_trace(m, tr, tr.point) == []


def test_swapped_steps_reported():
    m = generate(GenSpec("grid", n=8))
    res, tr = locate(m, 0, (4.3, 4.7), WalkConfig(record_trace=True))
    assert res.steps >= 3
    forged = copy.deepcopy(tr)
    forged.steps[0], forged.steps[1] = forged.steps[1], forged.steps[0]
    report = audit_trace(m, forged, forged.point)
    assert any("connectivity" in line for line in report)


def test_forged_non_decreasing_step_reported():
    """Replacing a step with the other successor, correctly labelled,
    still trips the strict-descent re-check."""
    m = two_row_strip()
    p = (0.0, 1.5)
    res, tr = locate(m, 0, p, WalkConfig(record_trace=True))
    assert res.steps == 2
    cur = tr.steps[0].edge
    flip = {"L": "R", "R": "L"}[tr.steps[1].choice]
    other = m.inv(m.prev(cur)) if flip == "L" else m.inv(m.next(cur))
    forged = copy.deepcopy(tr)
    forged.steps[1] = WalkStep(other, flip, oriented_distance(m.segment(other), p))
    report = audit_trace(m, forged, p)
    assert any("descent" in line for line in report)
    assert any("half-space" in line for line in report)


def test_forged_snapshot_reported():
    m = two_row_strip()
    res, tr = locate(m, 0, (0.0, 1.5), WalkConfig(record_trace=True))
    forged = copy.deepcopy(tr)
    s = forged.steps[0]
    forged.steps[0] = WalkStep(
        s.edge, s.choice, s.od._replace(alpha_display=s.od.alpha_display + 1e-3))
    report = audit_trace(m, forged, forged.point)
    assert any("snapshot" in line for line in report)


def test_forged_bootstrap_flag_reported():
    m = single_triangle()
    res, tr = locate(m, 0, (0.5, 0.5), WalkConfig(record_trace=True))
    forged = copy.deepcopy(tr)
    forged.bootstrap_inverted = True
    report = audit_trace(m, forged, forged.point)
    assert report


def test_stats_accounting():
    m = single_triangle()
    _, tr = locate(m, 0, (0.5, 0.5), WalkConfig(record_trace=True))
    assert link_distance_stats(m, tr) == {"steps": 0, "atomic_ops": 0}
    _, tr = locate(m, 3, (0.5, 0.5), WalkConfig(record_trace=True))
    assert link_distance_stats(m, tr) == {"steps": 0, "atomic_ops": 1}
    m2 = two_row_strip()
    res, tr = locate(m2, 0, (0.0, 1.5), WalkConfig(record_trace=True))
    assert res.steps == 2
    assert link_distance_stats(m2, tr) == {"steps": 2, "atomic_ops": 6}
